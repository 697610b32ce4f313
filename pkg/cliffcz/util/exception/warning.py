from cliffcz.util.exception.exception_info import ExceptionInfo, ExceptionType


class WarningException(ExceptionInfo):
    def __init__(self, name, code, msg):
        super(WarningException, self).__init__(name=name, exp_type=ExceptionType.WARNING, code=code, msg=msg)


class WarningName:
    TABLE_VALIDATION_WARNING = 'Table validation issue'
    VERIFICATION_WARNING = 'Verification issue'
    STORAGE_WARNING = 'Table storage issue'


class WarningCode:
    WARNING_CODE_001 = 'W001'
    WARNING_CODE_002 = 'W002'
    WARNING_CODE_003 = 'W003'


class WarningMessage:
    TABLES_MISSING = 'Tables not found in {}. Regenerating them'
    CHECK_FAILED = 'Check {} failed: expected={} observed={}'
    NOT_WRITABLE = 'Cannot write tables to {} ({}). Keeping them in memory only'

import logging

from tqdm import tqdm

from cliffcz.flow.check import Check
from cliffcz.flow.report import VerificationReport
from cliffcz.util.exception import WarningCode, WarningException, WarningMessage, WarningName

logger = logging.getLogger(__name__)


class Pipeline(list):
    """
    Checks run one after another against the same atlas.

    :param list checks: list of Check
    :param str name: Name of this pipeline
    :param int verbose: Show a progress bar if larger than 0
    """

    def __init__(self, checks=None, name='Pipeline', verbose=0):
        if checks is None:
            list.__init__(self, [])
        elif isinstance(checks, Check):
            list.__init__(self, [checks])
        elif isinstance(checks, list):
            for check in checks:
                if not isinstance(check, Check):
                    raise ValueError('At least one of the checks does not belong to Check')
            list.__init__(self, checks)
        else:
            raise ValueError('Expected None, Check or list of Check while {} is passed'.format(type(checks)))
        self.name = name
        self.verbose = verbose

    def run(self, atlas):
        """
        :param CliffordAtlas atlas: Atlas to verify
        :return: VerificationReport
        """
        checks = tqdm(self, desc=self.name, leave=False) if self.verbose > 0 else self
        results = []
        for check in checks:
            result = check.run(atlas)
            logger.debug(result.to_text().strip())
            results.append(result)

        report = VerificationReport(results)
        for failure in report.failures():
            WarningException(name=WarningName.VERIFICATION_WARNING, code=WarningCode.WARNING_CODE_002,
                             msg=WarningMessage.CHECK_FAILED.format(
                                 failure.name, failure.expected, failure.observed)).output()
        return report

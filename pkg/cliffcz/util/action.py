class GraphFormat:
    DOT = 'dot'
    JSON = 'json'

    @staticmethod
    def getall():
        return [GraphFormat.DOT, GraphFormat.JSON]


class Command:
    GENERATE = 'generate'
    ORBITS = 'orbits'
    GRAPH = 'graph'
    SYNTH = 'synth'
    LOOKUP = 'lookup'
    VERIFY = 'verify'

    @staticmethod
    def getall():
        return [Command.GENERATE, Command.ORBITS, Command.GRAPH, Command.SYNTH, Command.LOOKUP, Command.VERIFY]


class ExitStatus:
    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    USAGE_ERROR = 2
    INPUT_FORMAT_ERROR = 3
    NOT_CLIFFORD = 4


class TableName:
    C1 = 'c1'
    LC2 = 'lc2'
    C2 = 'c2'

    @staticmethod
    def getall():
        return [TableName.C1, TableName.LC2, TableName.C2]

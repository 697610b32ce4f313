import logging
import operator
from collections import namedtuple

from cliffcz.util.exception import CliffordError

logger = logging.getLogger(__name__)

PASS = 'PASS'
FAIL = 'FAIL'


def format_value(value):
    if isinstance(value, dict):
        return ','.join('{}:{}'.format(k, format_value(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return '[{}]'.format(','.join(format_value(v) for v in value))
    return str(value)


class CheckResult(namedtuple('CheckResult', ['name', 'expected', 'observed', 'passed', 'informational'])):
    def to_text(self):
        if self.informational:
            return 'INFO {} observed={}'.format(self.name, format_value(self.observed))
        return 'CHECK {} expected={} observed={} {}'.format(
            self.name, format_value(self.expected), format_value(self.observed), PASS if self.passed else FAIL)


class Check:
    """
    One named verification.

    :param str name: Name printed in the report
    :param expected: Expected observation
    :param func observe: Function from CliffordAtlas to the observed value
    :param func compare: Function (observed, expected) to bool. Default is equality.
    :param bool informational: Report the observation without judging it

    >>> Check('orbit-count', 20, lambda atlas: atlas.orbits.orbit_count)
    """

    def __init__(self, name, expected, observe, compare=operator.eq, informational=False):
        self.name = name
        self.expected = expected
        self.observe = observe
        self.compare = compare
        self.informational = informational

    def run(self, atlas):
        try:
            observed = self.observe(atlas)
        except (CliffordError, ArithmeticError) as e:
            logger.debug('check %s raised %r', self.name, e)
            return CheckResult(self.name, self.expected, 'error:{}'.format(type(e).__name__), False,
                               self.informational)
        passed = True if self.informational else bool(self.compare(observed, self.expected))
        return CheckResult(self.name, self.expected, observed, passed, self.informational)

    def __repr__(self):
        return 'Check({})'.format(self.name)

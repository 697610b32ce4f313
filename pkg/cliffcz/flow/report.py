class VerificationReport:
    """
    Ordered check results. The report passes iff every judged check passes.
    """

    def __init__(self, results=None):
        self.results = list(results or [])

    @property
    def checks(self):
        return [r for r in self.results if not r.informational]

    @property
    def overall(self):
        return all(r.passed for r in self.checks)

    def failures(self):
        return [r for r in self.checks if not r.passed]

    def names(self):
        return [r.name for r in self.results]

    def get(self, name):
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_text(self):
        lines = [r.to_text() for r in self.results]
        lines.append('OVERALL {}'.format('PASS' if self.overall else 'FAIL'))
        return '\n'.join(lines) + '\n'

    def __len__(self):
        return len(self.results)

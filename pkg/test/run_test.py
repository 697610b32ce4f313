import unittest
import sys
import logging


if __name__ == '__main__':
    sys.path.append('../cliffcz')

    # keep build progress logs out of the test output
    logging.getLogger('cliffcz').setLevel(logging.ERROR)

    test_dirs = [
        'test/model/ring/',
        'test/model/matrix/',
        'test/model/group/',
        'test/model/orbit/',
        'test/synth/',
        'test/flow/',
        'test/util/',
        'test/util/file/',
        'test/util/math/',
        'test/atlas/',
        'test/cli/'
    ]

    runner = unittest.TextTestRunner()

    for test_dir in test_dirs:
        loader = unittest.TestLoader()
        suite = loader.discover(test_dir)
        runner.run(suite)

import os

from dotenv import find_dotenv, load_dotenv

ATLAS_DIR_ENV = 'CLIFFORD_ATLAS_DIR'
DEFAULT_ATLAS_DIR = os.path.join('~', '.cliffcz', 'atlas')

# Hard stop for closure. The largest group built here has 92160 elements.
MAX_GROUP_ORDER = 10 ** 6
# Number of matrices multiplied per vectorised call
BATCH_SIZE = 4096
SAMPLE_SIZE = 1000
SAMPLE_SEED = 192


def get_atlas_dir(override=None, env_path=None):
    """
    :param str override: Directory given on the command line. Takes precedence over environment.
    :param str env_path: Path of a .env file. Default is searching from the working directory.
    :return: Absolute table directory

    >>> get_atlas_dir()
    """
    if override:
        return os.path.abspath(os.path.expanduser(override))

    load_dotenv(env_path or find_dotenv(usecwd=True))
    path = os.environ.get(ATLAS_DIR_ENV) or DEFAULT_ATLAS_DIR
    return os.path.abspath(os.path.expanduser(path))

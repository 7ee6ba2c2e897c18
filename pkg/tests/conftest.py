"""Pytest configuration and fixtures."""
import os
import random
import shutil
import tempfile

import pytest

from knotgroups.braidrep.fixtures import kishino_g3, trefoil_g1, trefoil_g2, trefoil_g3
from knotgroups.freegroup.words import Alphabet


@pytest.fixture
def temp_dir():
    """Create a temporary directory."""
    temp = tempfile.mkdtemp()
    yield temp
    shutil.rmtree(temp)


@pytest.fixture
def sample_config(temp_dir):
    """Create a sample configuration file."""
    config_content = """
logging:
  level: "WARNING"

algebra:
  truncate: 4
  degreeCap: 12

nilpotent:
  maxClass: 5
  maxRank: 3

fixtures:
  defaultR: 1

kishino:
  includeRelationOne: true

selftest:
  seed: 7
  iterations: 4
"""
    config_path = os.path.join(temp_dir, "config.yaml")
    with open(config_path, 'w') as f:
        f.write(config_content)
    return config_path


@pytest.fixture
def rank2():
    """The alphabet x, y."""
    return Alphabet.from_labels(['x', 'y'])


@pytest.fixture
def g1():
    """trefoil-g1 with r = 1."""
    return trefoil_g1(1)


@pytest.fixture
def g2():
    return trefoil_g2()


@pytest.fixture
def g3():
    return trefoil_g3()


@pytest.fixture
def kishino():
    return kishino_g3()


@pytest.fixture
def rng():
    """Seeded generator so randomized tests are reproducible."""
    return random.Random(20240611)

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))
sys.path.insert(0, os.path.dirname(__file__))

from modelfile.parser import load_model

MODELS = os.path.join(os.path.dirname(__file__), '..', 'models')


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: randomized corpus suites")


@pytest.fixture(scope="session")
def models_dir():
    return MODELS


@pytest.fixture(scope="session")
def fig1():
    return load_model(os.path.join(MODELS, 'fig1.ta'))


@pytest.fixture(scope="session")
def fig5():
    return load_model(os.path.join(MODELS, 'fig5.ta'))

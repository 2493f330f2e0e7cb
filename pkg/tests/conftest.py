"""
Fixtures compartidas de la suite.
"""

import sys
from pathlib import Path

import pytest

# Agregar el directorio del proyecto al path para imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.constants import FilePaths
from src.chain import deploy
from src.checker import check_contract
from src.state import SystemParams, new_configuration
from src.syntax import parse_contract

MY_TOKEN_SOURCE = """
contract MyToken {
    uint256 @address balance;
    function transfer(address payee, uint256 amount)
    @address returns
    {
        if (amount <= balance) then {
            balance := balance - amount;
            relay @ payee mint (amount);
        } else { skip }
    }
}
"""

@pytest.fixture
def my_token_source():
    return MY_TOKEN_SOURCE

@pytest.fixture
def my_token():
    return parse_contract(MY_TOKEN_SOURCE)

@pytest.fixture
def params():
    return SystemParams(n=2, k=2, seed=0)

@pytest.fixture
def token_registry(my_token):
    return check_contract(my_token).registry

@pytest.fixture
def token_cfg(my_token, token_registry, params):
    """MyToken desplegado en n=2, k=2"""
    return deploy(new_configuration(params), my_token, token_registry)

@pytest.fixture
def counter_contract():
    return parse_contract(FilePaths.GLOBAL_COUNTER_PATH.read_text(encoding="utf-8"))

@pytest.fixture
def contracts_dir():
    return FilePaths.CONTRACTS_DIR

@pytest.fixture
def scenarios_dir():
    return FilePaths.SCENARIOS_DIR

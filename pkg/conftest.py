import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: griglie di accettazione lunghe (deselezionabili con -m 'not slow')")

import pathlib

import pytest

from zetaladder import engine, integral

# Session cache lives outside tmp so repeated test runs reuse quadrature
# work.  The filename carries the engine fingerprint, so compiled and
# pure-python runs (ZL_PURE_PYTHON=1) keep separate, mutually valid files.
CACHE_DIR = pathlib.Path(__file__).resolve().parent.parent / ".zlcache"


@pytest.fixture(scope="session")
def main_cache():
    CACHE_DIR.mkdir(exist_ok=True)
    tag = engine.fingerprint(engine.DEFAULT).replace("/", "_")
    path = CACHE_DIR / f"main-{tag}.txt"
    return integral.open_cache(str(path))


@pytest.fixture()
def tmp_cache(tmp_path):
    return integral.new_cache(str(tmp_path / "cache.txt"))


@pytest.fixture()
def mem_cache():
    return integral.new_cache(None)

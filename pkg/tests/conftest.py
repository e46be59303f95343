import pytest
from click.testing import CliRunner

from rexlab.oracles.suites import SuiteConfig
from rexlab.syntax.parser import parse_indexed, parse_named


@pytest.fixture
def ix():
    """Parser for the indexed syntax"""
    return parse_indexed


@pytest.fixture
def nm():
    """Parser for the named syntax"""
    return parse_named


@pytest.fixture
def tiny_config() -> SuiteConfig:
    """A universe small enough to run every suite in seconds"""
    return SuiteConfig(
        size=3,
        named_size=3,
        subst_size=2,
        pair_size=2,
        fv_bound=2,
        max_index=2,
        join_depth=4,
        max_steps=200,
    )


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def report_dir(tmp_path):
    path = tmp_path / "reports"
    return path

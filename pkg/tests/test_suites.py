import pytest
from pydantic import ValidationError

from rexlab.config import settings
from rexlab.constants.calculi import Strategy
from rexlab.oracles.schemas import ReportStatus
from rexlab.oracles.suites import SUITES, SuiteConfig, get_suite, run_all, run_suite

SUITE_IDS = [
    "cor1",
    "thm1",
    "lemA",
    "lemB",
    "lemC",
    "iso-roundtrip",
    "iso-step-u",
    "iso-step-w",
    "iso-eq",
    "iso-open",
    "sim",
    "term-bound",
    "joinability",
    "eqd",
    "enum-count",
    "meta-inv",
    "term-core",
]


def test_every_suite_is_registered():
    assert sorted(SUITES) == sorted(SUITE_IDS)


@pytest.mark.parametrize("suite_id", SUITE_IDS)
def test_suite_passes_on_a_small_universe(suite_id, tiny_config):
    report = run_suite(suite_id, tiny_config)
    assert report.status is ReportStatus.PASS, report.counterexamples
    assert report.universe > 0
    assert report.property_id == suite_id
    assert report.validate() == []


def test_thm1_for_a_single_index(tiny_config):
    report = run_suite("thm1", tiny_config.model_copy(update={"n": 1}))
    everything = run_suite("thm1", tiny_config)
    assert report.passed
    assert report.universe * tiny_config.max_index == everything.universe


def test_unset_fields_take_the_suite_defaults():
    cfg = SuiteConfig().resolve(get_suite("cor1").defaults)
    assert (cfg.size, cfg.fv_bound) == (6, 4)
    assert SuiteConfig(size=2).resolve(get_suite("cor1").defaults).size == 2


def test_shards_partition_the_universe(tiny_config):
    whole = run_suite("lemB", tiny_config)
    shards = [
        run_suite("lemB", tiny_config.model_copy(update={"shard": (index, 3)}))
        for index in range(3)
    ]
    assert sum(shard.universe for shard in shards) == whole.universe
    merged = shards[0].merge(shards[1]).merge(shards[2])
    assert merged.universe == whole.universe
    assert merged.status is ReportStatus.PASS


def test_workers_merge_their_shards(tiny_config):
    whole = run_suite("meta-inv", tiny_config)
    parallel = run_suite("meta-inv", tiny_config.model_copy(update={"workers": 2}))
    assert parallel.universe == whole.universe
    assert parallel.passed


def test_random_mode_draws_the_requested_cases():
    cfg = SuiteConfig(random_cases=20, random_min_size=4, random_max_size=8, seed=3)
    report = run_suite("cor1", cfg)
    # 20 substitution pairs and 20 beta terms
    assert report.universe == 40
    assert report.passed


def test_random_mode_is_reproducible():
    cfg = SuiteConfig(random_cases=10, random_min_size=4, random_max_size=6, seed=11)
    first = run_suite("lemC", cfg)
    second = run_suite("lemC", cfg)
    assert first.universe == second.universe
    assert first.counterexamples == second.counterexamples


def test_step_bound_is_reported_not_raised():
    cfg = SuiteConfig(size=3, fv_bound=2, max_steps=0, strategies=(Strategy.LEFTMOST_OUTERMOST,))
    report = run_suite("term-bound", cfg)
    assert report.status is ReportStatus.BOUND_EXCEEDED
    assert report.counterexamples[0]["law"] == "substitution-terminates"


def test_run_all(tiny_config):
    reports = run_all(tiny_config)
    assert [report.property_id for report in reports] == list(SUITES)


def test_unknown_suite():
    with pytest.raises(ValueError, match="Unknown suite"):
        get_suite("nope")


@pytest.mark.parametrize("shard", [(2, 2), (-1, 2), (0, 0)])
def test_invalid_shard(shard):
    with pytest.raises(ValidationError):
        SuiteConfig(shard=shard)


@pytest.mark.slow
@pytest.mark.parametrize(
    "suite_id, cfg",
    [
        ("cor1", SuiteConfig(size=6, fv_bound=4)),
        ("iso-roundtrip", SuiteConfig(size=5, named_size=5)),
        ("enum-count", SuiteConfig(size=6)),
    ],
)
def test_acceptance_universes(suite_id, cfg):
    assert run_suite(suite_id, cfg).passed


@pytest.mark.slow
@pytest.mark.parametrize("suite_id", ["cor1", "lemB", "iso-step-u", "eqd"])
def test_random_acceptance(suite_id):
    cfg = SuiteConfig(random_cases=settings.RANDOM_CASES // 10)
    assert run_suite(suite_id, cfg).passed


@pytest.mark.slow
@pytest.mark.parametrize("suite_id", ["thm1", "lemA", "lemB", "lemC", "sim", "joinability"])
def test_default_universes_pass(suite_id):
    report = run_suite(suite_id, SuiteConfig())
    assert report.status is ReportStatus.PASS, report.counterexamples
    assert report.failures == 0
    assert report.universe > 0


@pytest.mark.slow
def test_translation_laws_with_workers():
    report = run_suite("lemC", SuiteConfig(workers=2))
    assert report.status is ReportStatus.PASS, report.counterexamples
    assert report.failures == 0
    resolved = SuiteConfig().resolve(get_suite("lemC").defaults)
    assert (resolved.size, resolved.named_size) == (5, 4)

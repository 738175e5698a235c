import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cvmatch import CvRecord, JobOffer  # noqa: E402

# 21 tokens after normalization: mineria x2, scrapy, aplicar, sistema x2,
# recomendacion x2, plus 13 filler terms.
WORKED_D1 = (
    "Minería minería Scrapy aplicando sistema Sistema recomendación recomendación "
    "python java analisis estadistica redes neuronales proyectos universidad "
    "ingenieria software web clientes reportes"
)
WORKED_D2 = "minería, sistema de recomendación; gestion equipos"
WORKED_D3 = "Scrapy excel powerbi linux git"


@pytest.fixture
def worked_cv():
    return CvRecord(0, "Ana", WORKED_D1, WORKED_D2, WORKED_D3)


@pytest.fixture
def worked_job():
    return JobOffer(0, "Minería Scrapy", description="aplicando sistema de recomendación")


_results = {}


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if _results.get(crit) != "failed":
            _results[crit] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker:
        outcome.get_result().criterion = (marker.args[0], marker.args[1])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), outcome in sorted(_results.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")

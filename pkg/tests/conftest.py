import sys
from pathlib import Path

# allow cross-imports between test modules (test helpers) regardless of cwd
sys.path.insert(0, str(Path(__file__).parent))


def pytest_runtest_logreport(report):
    """One visible pass/fail line per acceptance criterion."""
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        outcome = "PASS" if report.passed else "FAIL"
        print(f"\nACCEPTANCE {name}: {outcome}", file=sys.stderr)

import os
import random

import pytest
from hypothesis import HealthCheck, settings

from univdist import Word

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=30, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def random_word(rng: random.Random, n: int, sigma: int) -> Word:
    letters = list(range(1, sigma + 1)) + [rng.randint(1, sigma) for _ in range(n - sigma)]
    rng.shuffle(letters)
    return Word.from_letters(letters)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    key = (mark.args[0], mark.args[1])
    ok, notes = _ACCEPTANCE.get(key, (True, []))
    ok = ok and rep.passed
    if rep.when == "call":
        notes = notes + [v for k, v in item.user_properties if k == "detail"]
    if rep.failed:
        notes = notes + [f"{item.name} failed during {rep.when}"]
    _ACCEPTANCE[key] = (ok, notes)


_ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title) in sorted(_ACCEPTANCE):
        ok, notes = _ACCEPTANCE[(num, title)]
        line = f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title}"
        if notes:
            line += "  [" + "; ".join(notes) + "]"
        terminalreporter.write_line(line)

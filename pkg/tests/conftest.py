import os

import pytest

from kcert.oracle import default_corpus, generate
from kcert.stream_io import write_stream

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def stream_file(tmp_path):
    """Write ``(n, edges)`` to a stream file and return its path."""
    counter = iter(range(10**6))

    def make(n, edges, text=None):
        path = tmp_path / f"stream{next(counter)}.txt"
        if text is not None:
            path.write_text(text)
        else:
            write_stream(path, n, edges)
        return str(path)

    return make


@pytest.fixture(scope="session")
def corpus_files(tmp_path_factory):
    """Every corpus entry built once: ``[(entry, graph, stream_order, path)]``."""
    root = tmp_path_factory.mktemp("corpus")
    out = []
    for i, entry in enumerate(default_corpus()):
        path = os.path.join(root, f"{i:03d}_{entry.label()}.txt")
        g, order = generate(entry.model, entry.params(), entry.seed, path=path)
        out.append((entry, g, order, path))
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")

import numpy as np
import pytest

from zipftext.corpus import TokenizedText


def model_probabilities(c: float, n: int) -> np.ndarray:
    r = np.arange(1, n + 1)
    p = c / r - c / n
    return p / p.sum()


def sample_tokens(p: np.ndarray, N: int, seed: int, prefix: str = "w") -> list[str]:
    """N i.i.d. words; word ``f"{prefix}{i}"`` has probability ``p[i]``."""
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(p), size=N, p=p)
    return [f"{prefix}{_letters(i)}" for i in idx]


def _letters(i: int) -> str:
    # tokens must be alphabetic to survive re-tokenization
    s = ""
    i += 1
    while i:
        i, rem = divmod(i - 1, 26)
        s = chr(97 + rem) + s
    return s


def synthetic_book(tokens: list[str], seed: int, sentence_mean: float = 9.0, para_sentences: int = 8) -> str:
    """Lay tokens out as punctuated sentences grouped in blank-line paragraphs."""
    rng = np.random.default_rng(seed)
    out, para, sent = [], [], []
    for tok in tokens:
        sent.append(tok)
        if rng.random() < 1.0 / sentence_mean:
            para.append(" ".join(sent) + rng.choice([".", ".", ".", "?", "!"]))
            sent = []
            if len(para) >= para_sentences:
                out.append(" ".join(para))
                para = []
    if sent:
        para.append(" ".join(sent) + ".")
    if para:
        out.append(" ".join(para))
    return "\n\n".join(out) + "\n"


@pytest.fixture
def tokens_text():
    def make(words: str | list[str], label: str = "t") -> TokenizedText:
        if isinstance(words, str):
            words = words.split()
        return TokenizedText.from_tokens(words, label=label)

    return make


def law_tokens(K: float, gamma: float = 1.0, n: int = 4000, shared: int = 0, prefix: str = "w",
               seed: int = 0, flat_head: int = 0) -> list[str]:
    """Shuffled tokens whose counts are round(K r^-gamma).

    Words past ``shared`` carry ``prefix`` so different texts can have disjoint tails.
    ``flat_head`` > 0 flattens the top ranks, which pushes r_min up; the
    surplus goes to the top word so the token count does not change.
    """
    r = np.arange(1, n + 1)
    counts = np.floor(K * r**-gamma + 0.5).astype(int)
    if flat_head:
        total = counts.sum()
        counts[:flat_head] = counts[flat_head] + 3 * (flat_head - np.arange(flat_head))
        counts[0] += total - counts.sum()
    toks = []
    for k, c in enumerate(counts[counts > 0]):
        toks += [("w" if k < shared else prefix) + _letters(k)] * int(c)
    np.random.default_rng(seed).shuffle(toks)
    return toks


# acceptance criteria outcomes, printed once at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])

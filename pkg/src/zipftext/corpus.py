"""Ingestion of plain UTF-8 text: words, sentences, paragraphs, halves and mixtures.

A word is a maximal run of alphabetic characters in which a single internal
apostrophe is allowed ("don't"); hyphens, digits and every other symbol
separate words. Tokens are lowercased, so singular and plural stay distinct
but case variants merge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigError, IngestionError, SplitError

_LETTER_RUN = r"[^\W\d_]+"


@dataclass(frozen=True)
class TokenizerConfig:
    """Word and structure definitions used by :func:`tokenize`.

    ``paragraph_delimiter`` is a regular expression; the default treats one or
    more blank (whitespace-only) lines as a paragraph break.
    """

    punctuation: str = ".,:;?!"
    sentence_terminators: str = ".?!"
    apostrophes: str = "'’"
    paragraph_delimiter: str = r"\n[^\S\n]*\n"
    lowercase: bool = True

    @classmethod
    def parse(cls, text: str) -> "TokenizerConfig":
        """Read ``key = value`` lines; ``#`` starts a comment, ``none`` means empty."""
        known = {f for f in cls.__dataclass_fields__}
        values: dict[str, object] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or key not in known:
                raise ConfigError(f"line {lineno}: expected one of {sorted(known)} as 'key = value'")
            if key == "lowercase":
                if value.lower() not in {"true", "false", "yes", "no", "1", "0"}:
                    raise ConfigError(f"line {lineno}: lowercase must be a boolean")
                values[key] = value.lower() in {"true", "yes", "1"}
            else:
                values[key] = "" if value.lower() == "none" else value
        cfg = cls(**values)
        try:
            re.compile(cfg.paragraph_delimiter)
        except re.error as exc:
            raise ConfigError(f"bad paragraph_delimiter: {exc}") from exc
        if not set(cfg.sentence_terminators) <= set(cfg.punctuation):
            raise ConfigError("sentence terminators must be punctuation signs")
        return cfg

    @classmethod
    def from_file(cls, path: str | Path) -> "TokenizerConfig":
        return cls.parse(Path(path).read_text(encoding="utf-8"))


DEFAULT_CONFIG = TokenizerConfig()


@dataclass(frozen=True)
class TokenizedText:
    """Word stream of one text plus its structural counts.

    Texts built from a bare token list (random halves, synthetic streams)
    carry word-level data only; their structural fields are ``None``.
    """

    tokens: tuple[str, ...]
    letter_count: int
    punct_count: int | None = None
    sentence_lengths: tuple[int, ...] | None = None
    paragraph_count: int | None = None
    byte_size: int | None = None
    label: str = ""
    source: str | None = field(default=None, repr=False, compare=False)
    config: TokenizerConfig = field(default=DEFAULT_CONFIG, repr=False, compare=False)

    @property
    def N(self) -> int:
        return len(self.tokens)

    @property
    def sentence_count(self) -> int | None:
        return None if self.sentence_lengths is None else len(self.sentence_lengths)

    @property
    def has_structure(self) -> bool:
        return self.sentence_lengths is not None

    @classmethod
    def from_tokens(cls, tokens: Iterable[str], label: str = "") -> "TokenizedText":
        toks = tuple(tokens)
        return cls(tokens=toks, letter_count=_count_letters(toks), label=label)


@dataclass(frozen=True)
class SplitResult:
    first: TokenizedText
    second: TokenizedText
    mode: str
    seed: int | None = None


def _count_letters(tokens: Iterable[str]) -> int:
    return sum(ch.isalpha() for tok in tokens for ch in tok)


def _word_pattern(config: TokenizerConfig) -> re.Pattern[str]:
    if config.apostrophes:
        apos = re.escape(config.apostrophes)
        return re.compile(rf"{_LETTER_RUN}(?:[{apos}]{_LETTER_RUN})?")
    return re.compile(_LETTER_RUN)


def _scan_exact(raw: str, start: int, end: int, apostrophes: str) -> list[tuple[int, int]]:
    # Character-level scanner, used only where the regex letter class is wider
    # than str.isalpha (e.g. superscript digits).
    spans = []
    i = start
    while i < end:
        if not raw[i].isalpha():
            i += 1
            continue
        j = i
        while j < end and raw[j].isalpha():
            j += 1
        if j + 1 < end and raw[j] in apostrophes and raw[j + 1].isalpha():
            j += 1
            while j < end and raw[j].isalpha():
                j += 1
        spans.append((i, j))
        i = j
    return spans


def _normalize(word: str, config: TokenizerConfig) -> str:
    if config.lowercase:
        word = word.lower()
    # lower() may emit combining marks (e.g. for dotted capital I); drop them
    letters = word
    for a in config.apostrophes:
        letters = letters.replace(a, "")
    if not letters.isalpha():
        word = "".join(ch for ch in word if ch.isalpha() or ch in config.apostrophes)
        word = word.strip(config.apostrophes)
    return word


def _scan(raw: str, config: TokenizerConfig) -> tuple[list[str], list[int]]:
    """Return the normalized words of ``raw`` and their start offsets."""
    words: list[str] = []
    starts: list[int] = []
    apos = config.apostrophes
    for m in _word_pattern(config).finditer(raw):
        text = m.group()
        letters = text
        for a in apos:
            letters = letters.replace(a, "")
        spans = [m.span()] if letters.isalpha() else _scan_exact(raw, m.start(), m.end(), apos)
        for s, e in spans:
            word = _normalize(raw[s:e], config)
            if word:
                words.append(word)
                starts.append(s)
    return words, starts


def _decode(raw: str | bytes) -> tuple[str, int]:
    if isinstance(raw, bytes):
        try:
            return raw.decode("utf-8"), len(raw)
        except UnicodeDecodeError as exc:
            raise IngestionError(f"input is not valid UTF-8: {exc}") from exc
    return raw, len(raw.encode("utf-8", errors="surrogatepass"))


def _sentence_lengths(raw: str, starts: Sequence[int], config: TokenizerConfig) -> tuple[int, ...]:
    if not starts:
        return ()
    terms = [i for i, ch in enumerate(raw) if ch in config.sentence_terminators] if config.sentence_terminators else []
    # sentence index of a word = number of terminators before it
    idx = np.searchsorted(np.asarray(terms, dtype=np.int64), np.asarray(starts, dtype=np.int64))
    counts = np.bincount(idx)
    return tuple(int(c) for c in counts if c > 0)


def _paragraph_count(raw: str, config: TokenizerConfig) -> int:
    return sum(1 for block in re.split(config.paragraph_delimiter, raw) if block.strip())


def segment(raw: str | bytes, config: TokenizerConfig = DEFAULT_CONFIG) -> tuple[tuple[int, ...], int]:
    """Sentence lengths in words and the paragraph count of ``raw``.

    Sentences end at a terminator sign; text after the last terminator forms
    one more sentence. Sentences without words are dropped.
    """
    text, _ = _decode(raw)
    _, starts = _scan(text, config)
    return _sentence_lengths(text, starts, config), _paragraph_count(text, config)


def tokenize(raw: str | bytes, config: TokenizerConfig = DEFAULT_CONFIG, label: str = "") -> TokenizedText:
    """Tokenize one text and compute its structural counts.

    Bytes input must be UTF-8; ``str`` input is sized by its UTF-8 encoding.
    """
    text, nbytes = _decode(raw)
    words, starts = _scan(text, config)
    return TokenizedText(
        tokens=tuple(words),
        letter_count=_count_letters(words),
        punct_count=sum(text.count(ch) for ch in config.punctuation),
        sentence_lengths=_sentence_lengths(text, starts, config),
        paragraph_count=_paragraph_count(text, config),
        byte_size=nbytes,
        label=label,
        source=text,
        config=config,
    )


def read_text(
    path: str | Path,
    config: TokenizerConfig = DEFAULT_CONFIG,
    trim: tuple[int | None, int | None] | None = None,
    label: str | None = None,
) -> TokenizedText:
    """Tokenize a file, optionally keeping only the byte range ``trim``."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise IngestionError(f"cannot read {path}: {exc}") from exc
    if trim is not None:
        data = data[slice(*trim)]
    return tokenize(data, config, label=path.stem if label is None else label)


def split_halves(t: TokenizedText, mode: str = "natural", seed: int | None = None) -> SplitResult:
    """Divide ``t`` into two halves of ``floor(N/2)`` words each.

    ``natural`` cuts the text at its midpoint word and recomputes all structural
    counts on each side of the cut (a sentence or paragraph straddling the cut
    is counted in both halves). ``random`` assigns word positions to the halves
    uniformly at random, keeping relative order; such halves are word-level only.
    The final word of an odd-length text is discarded.
    """
    if t.N < 2:
        raise SplitError(f"need at least 2 tokens to split, got {t.N}")
    h = t.N // 2
    if mode == "natural":
        if t.source is None:
            first = TokenizedText.from_tokens(t.tokens[:h], label=f"{t.label}/1")
            second = TokenizedText.from_tokens(t.tokens[h : 2 * h], label=f"{t.label}/2")
        else:
            _, starts = _scan(t.source, t.config)
            cut = starts[h]
            end = starts[2 * h] if 2 * h < len(starts) else len(t.source)
            first = tokenize(t.source[:cut], t.config, label=f"{t.label}/1")
            second = tokenize(t.source[cut:end], t.config, label=f"{t.label}/2")
        return SplitResult(first, second, "natural")
    if mode == "random":
        rng = np.random.default_rng(seed)
        perm = rng.permutation(2 * h)
        tokens = t.tokens
        a = [tokens[i] for i in np.sort(perm[:h])]
        b = [tokens[i] for i in np.sort(perm[h:])]
        return SplitResult(
            TokenizedText.from_tokens(a, label=f"{t.label}/r1"),
            TokenizedText.from_tokens(b, label=f"{t.label}/r2"),
            "random",
            seed,
        )
    raise ValueError(f"unknown split mode {mode!r}")


def _add(x: int | None, y: int | None) -> int | None:
    return None if x is None or y is None else x + y


def mix_texts(*texts: TokenizedText, label: str | None = None) -> TokenizedText:
    """Join texts end to end; every count of the mixture is the sum of the parts."""
    if len(texts) < 1 or any(t.N == 0 for t in texts):
        raise ValueError("mix_texts needs non-empty texts")
    out = texts[0]
    for t in texts[1:]:
        sent = None if out.sentence_lengths is None or t.sentence_lengths is None else out.sentence_lengths + t.sentence_lengths
        out = TokenizedText(
            tokens=out.tokens + t.tokens,
            letter_count=out.letter_count + t.letter_count,
            punct_count=_add(out.punct_count, t.punct_count),
            sentence_lengths=sent,
            paragraph_count=_add(out.paragraph_count, t.paragraph_count),
            byte_size=_add(out.byte_size, t.byte_size),
        )
    name = label if label is not None else "+".join(t.label for t in texts)
    return TokenizedText(
        tokens=out.tokens,
        letter_count=out.letter_count,
        punct_count=out.punct_count,
        sentence_lengths=out.sentence_lengths,
        paragraph_count=out.paragraph_count,
        byte_size=out.byte_size,
        label=name,
    )

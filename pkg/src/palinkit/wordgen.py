"""Generators for prefixes of infinite words used as scan corpora:
periodic words, fixed points of morphisms, and mechanical (Sturmian) words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, ResourceLimitError
from .words import BINARY, Alphabet, Word

MAX_GENERATED_LENGTH = 10_000_000


@dataclass(frozen=True)
class Morphism:
    """Substitution rules over one alphabet: symbol id -> replacement ids."""

    alphabet: Alphabet
    rules: dict[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        size = self.alphabet.size
        for src, image in self.rules.items():
            if not 0 <= src < size:
                raise PreconditionError(f"rule source {src} outside alphabet")
            if len(image) == 0:
                raise PreconditionError("erasing rules are not supported")
            for s in image:
                if not 0 <= s < size:
                    raise PreconditionError(f"rule image symbol {s} outside alphabet")
        if set(self.rules) != set(range(size)):
            raise PreconditionError("every alphabet symbol needs a rule")

    def prolongable_on(self, seed: int) -> bool:
        image = self.rules.get(seed, ())
        return len(image) >= 2 and image[0] == seed

    def apply(self, ids: list[int]) -> list[int]:
        rules = self.rules
        out: list[int] = []
        for s in ids:
            out.extend(rules[s])
        return out

    @staticmethod
    def parse(text: str) -> "Morphism":
        """Parse a rule list like ``0:01,1:10`` (single-character labels)."""
        pairs = []
        for chunk in text.split(","):
            if ":" not in chunk:
                raise PreconditionError(f"bad morphism rule {chunk!r}")
            src, image = chunk.split(":", 1)
            if len(src) != 1 or not image:
                raise PreconditionError(f"bad morphism rule {chunk!r}")
            pairs.append((src, image))
        labels = sorted({src for src, _ in pairs} | {c for _, img in pairs for c in img})
        alphabet = Alphabet(tuple(labels))
        rules = {
            alphabet.index(src): tuple(alphabet.index(c) for c in image)
            for src, image in pairs
        }
        return Morphism(alphabet=alphabet, rules=rules)


def _check_length(length: int) -> None:
    if length < 0:
        raise PreconditionError("length must be nonnegative")
    if length > MAX_GENERATED_LENGTH:
        raise ResourceLimitError(
            f"length {length} exceeds the {MAX_GENERATED_LENGTH} cap"
        )


def periodic_prefix(r: Word, length: int) -> Word:
    """The length-prefix of r repeated forever."""
    if len(r) == 0:
        raise PreconditionError("periodic_prefix requires a nonempty period word")
    _check_length(length)
    reps = length // len(r) + 1
    return Word((r.ids * reps)[:length], r.alphabet)


def morphic_prefix(m: Morphism, seed: int, length: int) -> Word:
    """The length-prefix of the fixed point of m at the seed symbol.

    Iterates the substitution on a working prefix, truncating to the target
    length each round; a prolongable morphism grows by at least one symbol
    per round, so this terminates.
    """
    if not m.prolongable_on(seed):
        raise PreconditionError("morphism is not prolongable on the seed symbol")
    _check_length(length)
    if length == 0:
        return Word((), m.alphabet)
    current = [seed]
    while len(current) < length:
        current = m.apply(current)[:length]
    return Word(current[:length], m.alphabet)


def mechanical_prefix(p: int, q: int, length: int) -> Word:
    """Lower mechanical word of rational slope p/q:
    s[i] = floor((i+1)p/q) - floor(ip/q)."""
    if not 0 < p < q:
        raise PreconditionError("slope must satisfy 0 < p < q")
    _check_length(length)
    return Word(
        ((i + 1) * p // q - i * p // q for i in range(length)),
        BINARY,
    )


def thue_morse_prefix(length: int) -> Word:
    return morphic_prefix(Morphism.parse("0:01,1:10"), 0, length)


def fibonacci_prefix(length: int) -> Word:
    return morphic_prefix(Morphism.parse("0:01,1:0"), 0, length)


@dataclass(frozen=True)
class WordFamily:
    """A parsed family descriptor; ``generate`` materializes prefixes."""

    kind: str
    period: Word | None = None
    morphism: Morphism | None = None
    seed: int | None = None
    slope_p: int | None = None
    slope_q: int | None = None

    def generate(self, length: int) -> Word:
        if self.kind == "periodic":
            return periodic_prefix(self.period, length)
        if self.kind == "morphic":
            return morphic_prefix(self.morphism, self.seed, length)
        if self.kind == "mechanical":
            return mechanical_prefix(self.slope_p, self.slope_q, length)
        raise PreconditionError(f"unknown family kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "periodic":
            return f"periodic:{self.period.text()}"
        if self.kind == "morphic":
            rules = ",".join(
                f"{self.morphism.alphabet.labels[src]}:"
                + "".join(self.morphism.alphabet.labels[s] for s in image)
                for src, image in sorted(self.morphism.rules.items())
            )
            return f"morphic:{rules}@{self.morphism.alphabet.labels[self.seed]}"
        return f"mechanical:{self.slope_p}/{self.slope_q}"


def parse_family(descriptor: str) -> WordFamily:
    """Parse a family descriptor:
    ``periodic:01`` | ``morphic:0:01,1:10[@seed]`` | ``mechanical:1/2``."""
    if ":" not in descriptor:
        raise PreconditionError(
            f"bad family descriptor {descriptor!r}; expected kind:parameters"
        )
    kind, rest = descriptor.split(":", 1)
    if kind == "periodic":
        if not rest:
            raise PreconditionError("periodic family needs a period word")
        return WordFamily(kind="periodic", period=Word.parse(rest))
    if kind == "morphic":
        seed_label = None
        if "@" in rest:
            rest, seed_label = rest.rsplit("@", 1)
        morphism = Morphism.parse(rest)
        if seed_label is None:
            seed_label = rest.split(":", 1)[0]
        seed = morphism.alphabet.index(seed_label)
        return WordFamily(kind="morphic", morphism=morphism, seed=seed)
    if kind == "mechanical":
        if "/" not in rest:
            raise PreconditionError("mechanical family needs a slope p/q")
        p_text, q_text = rest.split("/", 1)
        try:
            p, q = int(p_text), int(q_text)
        except ValueError as exc:
            raise PreconditionError(f"bad slope {rest!r}") from exc
        if not 0 < p < q:
            raise PreconditionError("slope must satisfy 0 < p < q")
        return WordFamily(kind="mechanical", slope_p=p, slope_q=q)
    raise PreconditionError(f"unknown family kind {kind!r}")

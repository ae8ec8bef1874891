"""Sparse multivariate Laurent polynomials with exact integer arithmetic.

Terms map integer exponent vectors (tuples of length nvars) to nonzero
arbitrary-precision integer coefficients.  The canonical term order used for
hashing and serialization is graded lexicographic: ascending by total
degree, then by exponent vector.
"""

from __future__ import annotations

from .errors import LengthMismatch, NonLaurentIntermediate


class LaurentPolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exp, coeff in dict(terms).items():
                if coeff:
                    self.terms[tuple(exp)] = coeff

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def variable(cls, nvars: int, idx: int) -> "LaurentPolynomial":
        exp = [0] * nvars
        exp[idx] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp, coeff: int = 1) -> "LaurentPolynomial":
        return cls(len(exp), {tuple(exp): coeff})

    # -- canonical order ------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def key(self) -> tuple:
        return tuple(self.sorted_terms())

    # -- ring operations ------------------------------------------------------

    def _check(self, other: "LaurentPolynomial") -> None:
        if self.nvars != other.nvars:
            raise LengthMismatch("operands live in different Laurent rings")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.key()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPolynomial(self.nvars, out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(
            self.nvars, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check(other)
        out = {}
        n = self.nvars
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(e1[i] + e2[i] for i in range(n))
                s = out.get(exp, 0) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        return LaurentPolynomial(self.nvars, out)

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise ValueError("negative powers of polynomials are not defined")
        out = LaurentPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- division -------------------------------------------------------------

    def shift(self, exp) -> "LaurentPolynomial":
        """Multiply by the Laurent monomial x^exp."""
        n = self.nvars
        return LaurentPolynomial(
            n,
            {
                tuple(e[i] + exp[i] for i in range(n)): c
                for e, c in self.terms.items()
            },
        )

    def _lowest_shift(self) -> tuple:
        n = self.nvars
        mins = [0] * n
        for i in range(n):
            mins[i] = min(e[i] for e in self.terms)
        return tuple(mins)

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division in the Laurent ring.

        Both operands are shifted to honest polynomials, then reduced by the
        divisor's lex-leading term; a nonzero remainder raises
        NonLaurentIntermediate.
        """
        self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPolynomial.zero(self.nvars)
        n = self.nvars
        if len(divisor.terms) == 1:
            (dexp, dcoeff), = divisor.terms.items()
            out = {}
            for e, c in self.terms.items():
                q, r = divmod(c, dcoeff)
                if r:
                    raise NonLaurentIntermediate("coefficient is not divisible")
                out[tuple(e[i] - dexp[i] for i in range(n))] = q
            return LaurentPolynomial(n, out)
        sshift = self._lowest_shift()
        dshift = divisor._lowest_shift()
        num = {tuple(e[i] - sshift[i] for i in range(n)): c for e, c in self.terms.items()}
        den = {tuple(e[i] - dshift[i] for i in range(n)): c for e, c in divisor.terms.items()}
        dlead = max(den)
        dlc = den[dlead]
        quot = {}
        rem = dict(num)
        while rem:
            lead = max(rem)
            qexp = tuple(lead[i] - dlead[i] for i in range(n))
            if any(x < 0 for x in qexp):
                raise NonLaurentIntermediate("division leaves a remainder")
            q, r = divmod(rem[lead], dlc)
            if r:
                raise NonLaurentIntermediate("leading coefficient does not divide")
            quot[qexp] = quot.get(qexp, 0) + q
            for de, dc in den.items():
                exp = tuple(qexp[i] + de[i] for i in range(n))
                s = rem.get(exp, 0) - q * dc
                if s:
                    rem[exp] = s
                else:
                    rem.pop(exp, None)
        shift = tuple(sshift[i] - dshift[i] for i in range(n))
        return LaurentPolynomial(n, quot).shift(shift)

    # -- structure ------------------------------------------------------------

    def is_positive(self) -> bool:
        """All coefficients strictly positive (Laurent positivity check)."""
        return all(c > 0 for c in self.terms.values())

    def is_laurent_monomial_denominator(self) -> bool:
        """Always true structurally; kept for audit symmetry."""
        return True

    def project(self, groups, new_nvars: int) -> "LaurentPolynomial":
        """Exponent projection: new exponent g = sum of old exponents in
        groups[g]; coefficients of collapsing terms add up."""
        out = {}
        for e, c in self.terms.items():
            exp = tuple(sum(e[v] for v in grp) for grp in groups)
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPolynomial(new_nvars, out)

    # -- display ---------------------------------------------------------------

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e:
                    factors.append(f"x{i + 1}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

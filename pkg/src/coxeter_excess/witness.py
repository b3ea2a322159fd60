"""
Zero-excess witnesses: every conjugacy class contains an element ``w*``
with an involution factorization ``w* = sigma tau`` that is length additive.

Construction, for ``w`` not of order <= 2:

1. pick a reverser ``y != 1`` of ``w`` and put ``x = w y``, so ``w = x y``;
2. conjugate everything so that ``y`` becomes ``w_J``, the longest element
   of a standard parabolic ``W_J`` acting as -1 on ``Phi_J``;
3. replace ``x`` by a shortest conjugate ``z = u^-1 x u`` with ``u`` in
   ``W_J`` (``y`` is central in ``W_J``, so ``z y`` is still conjugate to ``w``);
4. with ``K = {r in J : l(z r) < l(z)}`` put ``sigma = z w_K`` and
   ``tau = w_K y``; then ``N(sigma)`` misses ``Phi_J^+`` while
   ``N(tau)`` lies inside it, so lengths add.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Element, Group
from .errors import InternalProofViolation
from .excess import reversers
from .involution import richardson_normal_form
from .parabolic import longest_element_J, phi_J


@dataclass(frozen=True)
class WitnessCertificate:
    """``conjugator * input * conjugator^-1 == w_star == sigma * tau`` with ``l(w_star) = l(sigma) + l(tau)``."""

    input: Element
    conjugator: Element
    w_star: Element
    sigma: Element
    tau: Element
    J: frozenset[int]
    K: frozenset[int]

    def to_json(self, g: Group) -> dict:
        return {
            "w": g.format(self.input),
            "w_star": g.format(self.w_star),
            "sigma": g.format(self.sigma),
            "tau": g.format(self.tau),
            "conjugator": g.format(self.conjugator),
            "J": sorted(self.J),
            "K": sorted(self.K),
            "lengths": {"w_star": self.w_star.length, "sigma": self.sigma.length, "tau": self.tau.length},
        }


def certificate_problems(g: Group, cert: WitnessCertificate) -> list[str]:
    """Every certificate invariant that fails; empty when the certificate is valid."""
    problems = []
    if not (cert.sigma * cert.sigma).is_identity():
        problems.append("sigma^2 != 1")
    if not (cert.tau * cert.tau).is_identity():
        problems.append("tau^2 != 1")
    if cert.sigma * cert.tau != cert.w_star:
        problems.append("w_star != sigma tau")
    if cert.w_star.length != cert.sigma.length + cert.tau.length:
        problems.append("l(w_star) != l(sigma) + l(tau)")
    if cert.sigma.inversions() & cert.tau.inversions():
        problems.append("N(sigma) and N(tau) intersect")
    if cert.conjugator * cert.input * cert.conjugator.inverse() != cert.w_star:
        problems.append("conjugator does not carry w to w_star")
    if not cert.K <= cert.J:
        problems.append("K is not a subset of J")
    return problems


def _shortest_conjugate(g: Group, x: Element, J: frozenset[int]) -> tuple[Element, Element]:
    """Shortest ``u^-1 x u`` over ``u`` in ``W_J``, ties broken by reduced word; returns ``(z, u)``."""
    gens = [g.generators[r - 1] for r in sorted(J)]
    seen = {x: g.identity}
    queue = deque([x])
    while queue:
        z = queue.popleft()
        u = seen[z]
        for s in gens:
            z2 = s * z * s
            if z2 not in seen:
                seen[z2] = u * s
                queue.append(z2)
    z = min(seen, key=g.sort_key)
    return z, seen[z]


def _descend_conjugate(g: Group, x: Element, J: frozenset[int]) -> tuple[Element, Element]:
    """Greedy variant: conjugate by generators of ``J`` while that shortens ``x``."""
    gens = [(r, g.generators[r - 1]) for r in sorted(J)]
    z, u = x, g.identity
    while True:
        for r, s in gens:
            if z.images[r - 1] < 0:
                z2 = s * z * s
                if z2.length < z.length:
                    z, u = z2, u * s
                    break
        else:
            return z, u


def zero_excess_witness(g: Group, w: Element, mode: str = "global") -> WitnessCertificate:
    """
    Find ``w*`` conjugate to ``w`` together with a length-additive involution
    factorization.  ``mode="greedy"`` swaps the orbit-wide minimization of
    step 3 for a local descent.  The certificate is checked before it is
    returned; a failed check raises :class:`InternalProofViolation`.
    """
    if mode not in ("global", "greedy"):
        raise ValueError(f"unknown mode {mode!r}")

    if (w * w).is_identity():
        cert = WitnessCertificate(
            input=w, conjugator=g.identity, w_star=w, sigma=w, tau=g.identity, J=frozenset(), K=frozenset()
        )
    else:
        candidates = [y for y in reversers(g, w) if not y.is_identity()]
        y = min(candidates, key=g.sort_key)
        x = w * y

        rf = richardson_normal_form(g, y)
        h, h_inv = rf.conjugator, rf.conjugator.inverse()
        J, y = rf.J, rf.w_J
        x = h * x * h_inv

        if mode == "global":
            z, u = _shortest_conjugate(g, x, J)
        else:
            z, u = _descend_conjugate(g, x, J)

        K = frozenset(r for r in J if z.images[r - 1] < 0)
        w_K = longest_element_J(g, K)
        sigma = z * w_K
        tau = w_K * y
        cert = WitnessCertificate(
            input=w,
            conjugator=u.inverse() * h,
            w_star=sigma * tau,
            sigma=sigma,
            tau=tau,
            J=J,
            K=K,
        )
        phi = phi_J(g, J)
        if sigma.inversions() & phi or not tau.inversions() <= phi:
            raise InternalProofViolation("sigma/tau inversion sets are not separated by Phi_J^+")

    problems = certificate_problems(g, cert)
    if problems:
        raise InternalProofViolation(f"witness for {g.format(w)!r} failed: {'; '.join(problems)}")
    return cert

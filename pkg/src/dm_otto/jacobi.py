"""Dense Hermitian eigensolver built from cyclic complex Jacobi rotations.

Deliberately free of numpy.linalg: this is the independent numeric route
against which the closed-form spectrum is cross-checked, so it must not
share code with any library eigensolver.  Plain Python complex arithmetic
is also faster than numpy dispatch at the 4x4 sizes used here.

Each rotation annihilates one off-diagonal pair (p, q).  Writing
A[p][q] = r * phase with r = |A[p][q]|, the 2x2 block is first made real
by the phase gauge diag(1, conj(phase)) and then diagonalized by the
classical symmetric Jacobi rotation with t = tan(theta) the smaller root
of t^2 + 2*tau*t - 1 = 0, tau = (A[q][q] - A[p][p]) / (2r).  The product
of all plane rotations accumulates into the returned eigenvector matrix.
"""

import math

from .errors import EigensolverError, NonHermitianError

#: Off-diagonal Frobenius mass below ``_CONVERGENCE_EPS * scale`` counts as
#: diagonal.  Quadratic convergence makes ~6 sweeps plenty for 4x4 input;
#: the generous cap exists so non-convergence is a hard error, never a loop.
_CONVERGENCE_EPS = 1e-15
_MAX_SWEEPS = 100


def _off_norm(a, n):
    s = 0.0
    for p in range(n - 1):
        row = a[p]
        for q in range(p + 1, n):
            s += abs(row[q]) ** 2
    return math.sqrt(s)


def jacobi_eigh(matrix, hermitian_tol=1e-12):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi sweeps.

    ``matrix`` is any square sequence of sequences of numbers.  Returns
    ``(eigenvalues, eigenvectors)`` as plain lists, unordered, with
    ``eigenvectors[j]`` the unit-norm eigenvector for ``eigenvalues[j]``.

    Raises NonHermitianError when the input violates Hermiticity beyond
    ``hermitian_tol`` (absolute, relative to the largest entry), and
    EigensolverError if the sweep cap is exhausted.
    """
    n = len(matrix)
    a = [[complex(matrix[i][j]) for j in range(n)] for i in range(n)]

    scale = max((abs(a[i][j]) for i in range(n) for j in range(n)), default=0.0)
    tol = hermitian_tol * max(1.0, scale)
    for i in range(n):
        for j in range(i, n):
            if abs(a[i][j] - a[j][i].conjugate()) > tol:
                raise NonHermitianError(
                    f"matrix entry ({i},{j}) breaks Hermiticity by "
                    f"{abs(a[i][j] - a[j][i].conjugate()):.3e}"
                )

    v = [[1.0 + 0.0j if i == j else 0.0j for j in range(n)] for i in range(n)]
    stop = _CONVERGENCE_EPS * max(1.0, scale)

    for _ in range(_MAX_SWEEPS):
        if _off_norm(a, n) <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                cph = phase.conjugate()
                tau = (a[q][q].real - a[p][p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                # A <- A U, touching only columns p and q.
                for k in range(n):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = c * akp - (s * cph) * akq
                    a[k][q] = s * akp + (c * cph) * akq
                # A <- U^H A, touching only rows p and q.
                for k in range(n):
                    apk = a[p][k]
                    aqk = a[q][k]
                    a[p][k] = c * apk - (s * phase) * aqk
                    a[q][k] = s * apk + (c * phase) * aqk
                # V <- V U accumulates the eigenbasis.
                for k in range(n):
                    vkp = v[k][p]
                    vkq = v[k][q]
                    v[k][p] = c * vkp - (s * cph) * vkq
                    v[k][q] = s * vkp + (c * cph) * vkq
    else:
        raise EigensolverError(
            f"Jacobi sweeps did not converge within {_MAX_SWEEPS} passes "
            f"(residual off-diagonal norm {_off_norm(a, n):.3e})"
        )

    eigenvalues = [a[i][i].real for i in range(n)]
    eigenvectors = [[v[k][j] for k in range(n)] for j in range(n)]
    return eigenvalues, eigenvectors

from fractions import Fraction as F

import pytest

from bessellin import BiLaurent, a1, a2

ONE = BiLaurent.constant(1)


def _golden_35() -> dict[int, BiLaurent]:
    """Reference coefficient table for (n, m) = (3, 5).

    Transcribed term by term from the published table of these
    coefficients.  The k=4 entry is stored with its final bracket term
    corrected to 35*a1*a2^2: the printed 35*a1*a2 variant fails the
    defining reconstruction identity (see test_golden_beta4_misprint),
    while the corrected table reconstructs q_3(a1*u)*q_5(a2*u) exactly.
    """
    return {
        8: 143 * a1**3 * a2**5,
        7: F(-143, 5) * a1**2 * a2**4 * (12 * a1 * a2 - 5 * a1 - 2 * a2),
        6: F(11, 5) * a1 * a2**3 * (
            -140 * a1**2 * a2 + 35 * a1**2 + 30 * a1 * a2
            + 5 * a2**2 - 56 * a1 * a2**2 + 126 * a1**2 * a2**2
        ),
        5: a2**2 * (
            a2**3 + 42 * a1**2 * a2 + 28 * a1**3 + 84 * a1**2 * a2**3
            - 84 * a1**3 * a2**3 + 210 * a1**3 * a2**2 - 21 * a1 * a2**3
            - 147 * a1**3 * a2 + 15 * a1 * a2**2 - 126 * a1**2 * a2**2
        ),
        4: F(1, 3) * a2 * (
            245 * a1**3 * a2**2 + 21 * a1**3 * a2**4 - 140 * a1**3 * a2
            - 140 * a1**3 * a2**3 + 35 * a1 * a2**4 - 75 * a1 * a2**3
            - 56 * a1**2 * a2**4 + 210 * a1**2 * a2**3 - 210 * a1**2 * a2**2
            + 5 * a2**3 + 56 * a1**2 * a2 + 21 * a1**3 - 5 * a2**4
            + 35 * a1 * a2**2
        ),
        3: (
            a1**3 + F(5, 3) * a1**3 * a2**4 - F(5, 3) * a1 * a2**5
            - F(35, 3) * a1**3 * a2**3 + F(5, 3) * a2**3
            - F(50, 3) * a1 * a2**3 + F(75, 7) * a1 * a2**4
            + F(20, 3) * a1 * a2**2 - F(50, 21) * a2**4
            - 10 * a1**2 * a2**4 + 6 * a1**2 * a2 + 30 * a1**2 * a2**3
            - F(80, 3) * a1**2 * a2**2 + 20 * a1**3 * a2**2
            - 10 * a1**3 * a2 + F(5, 7) * a2**5 + F(2, 3) * a1**2 * a2**5
        ),
        2: F(-1, 105) * (a1 + a2 - ONE) * (
            140 * a1**2 * a2**2 + 126 * a1**2 - 315 * a1**2 * a2
            - 385 * a1 * a2**2 + 315 * a1 * a2 + 70 * a1 * a2**3
            - 70 * a2**3 + 140 * a2**2 + 5 * a2**4
        ),
        1: F(1, 15) * (a1 + a2 - ONE) * (
            3 * a1**2 + 15 * a1 * a2 - 15 * a1 - 15 * a2 + 5 * a2**2
        ),
        0: ONE - a1 - a2,
    }


@pytest.fixture(scope="session")
def golden_35() -> dict[int, BiLaurent]:
    return _golden_35()


@pytest.fixture(scope="session")
def golden_35_beta4_as_printed() -> BiLaurent:
    """The k=4 entry with the uncorrected final bracket term 35*a1*a2."""
    corrected = _golden_35()[4]
    return corrected + F(1, 3) * a2 * (35 * a1 * a2 - 35 * a1 * a2**2)

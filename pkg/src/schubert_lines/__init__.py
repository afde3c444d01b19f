"""Schubert calculus of lines in projective space, with exact verification.

Modules:

* :mod:`.tableau` -- two-row standard tableaux and the star calculus;
* :mod:`.plactic` -- jeu de taquin, the tableau product and LR coefficients;
* :mod:`.chow` -- products and intersection numbers in the Chow ring;
* :mod:`.linalg` -- exact linear algebra over ℚ and F_p;
* :mod:`.arrangements` -- flags with hyperplane arrangements and pencils;
* :mod:`.ffverify` -- brute-force line enumeration over F_q;
* :mod:`.acceptance` -- the end-to-end acceptance checks;
* :mod:`.cli` -- the ``schubert`` command line.
"""

__version__ = "0.1.0"

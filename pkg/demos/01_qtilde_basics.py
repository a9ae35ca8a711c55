"""
Q-tilde polynomials and their structure constants
=================================================

"""

from ogqh import expand, f_coeff, ptilde, qtilde
from ogqh.partitions import rho
from ogqh.polyengine import elementary
from ogqh.qtilde import e_coeffs, qtilde_x

# Q~_(2,1) in two variables is x1 x2 (x1 + x2)
print("Q~_(2,1)(x1, x2) =", qtilde_x((2, 1), 2))

# P~ carries the factor 2^-l as an explicit scale
print("P~_(1,1)(x1, x2) =", ptilde((1, 1), 2))

# symmetric coordinates: Q~_(1,1) = m_(2)
print(qtilde((1, 1), 2))

# expand e_1^2 back into the Q~ basis
e1 = elementary(1, 2)
print("e1^2 =", dict(expand(e1 * e1, 2).items()))

# e-coefficients of a product, and the f-coefficients derived from them
print("Q~_2 Q~_1 =", e_coeffs((2,), (1,), 3))
print("f(rho_3, rho_3; (4,4,2,2)) =", f_coeff(rho(3), rho(3), (4, 4, 2, 2)))

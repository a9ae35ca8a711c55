"""
Quantum products on OG(n+1, 2n+2)
=================================

"""

from ogqh import QuantumClass, quantum_pieri, quantum_product, tau
from ogqh.partitions import rho, strict_partitions

n = 3

# the top special class squares to q
print("tau_3 * tau_3 =", quantum_product((3,), (3,), n))

# Pieri products against the hyperplane class
for lam in strict_partitions(n):
    print(f"tau_{lam} * tau_1 =", quantum_pieri(lam, 1, n))

# n = 3 is a six dimensional quadric, so H^7 = 4 H q
h = tau((1,), n)
power = QuantumClass.basis((), n)
for _ in range(7):
    power = power * h
print("tau_1^7 =", power)

# squares of the point class
for m in range(2, 6):
    print(f"n={m}: tau_rho^2 =", quantum_product(rho(m), rho(m), m))

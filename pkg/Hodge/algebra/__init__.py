"""
Exact algebra: rationals, the cyclotomic field Q(zeta24), truncated
multivariate power series over it, and exact linear solving.

"""

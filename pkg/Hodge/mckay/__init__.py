"""
Group and root-system data: the permutation groups Z2xZ2, A4 and S4 on
four letters, and the D4 and E6 root systems of the McKay
correspondence.

"""

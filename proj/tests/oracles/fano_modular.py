"""Independent oracle: smallest 2^k admitting no odd-residue lift of the Fano pair.

Column scaling of H_X by units (compensated in H_Z) lets the first nonzero
entry of each H_X column be fixed to 1. For a fixed H_X the Z rows decouple,
so each row is checked on its own by enumerating its three odd coefficients.
"""
import itertools

HX = [[1,1,1,0,1,0,0],[1,1,0,0,0,1,1],[1,0,1,1,0,1,0]]
HZ = [[1,0,1,0,0,0,1],[0,1,0,0,1,0,1],[1,0,0,0,1,1,0],[0,1,1,0,0,1,0],
      [1,1,0,1,0,0,0],[0,0,1,1,1,0,0],[0,0,0,1,0,1,1]]

def solvable(k):
    m = 1 << k
    odd = list(range(1, m, 2))
    free = []
    for q in range(7):
        rows = [x for x in range(3) if HX[x][q]]
        free += [(x, q) for x in rows[1:]]
    for vals in itertools.product(odd, repeat=len(free)):
        hx = [[HX[x][q] for q in range(7)] for x in range(3)]
        for (x, q), v in zip(free, vals):
            hx[x][q] = v
        ok = True
        for z in HZ:
            sup = [q for q in range(7) if z[q]]
            found = False
            for coef in itertools.product(odd, repeat=len(sup)):
                if all(sum(c * hx[x][q] for c, q in zip(coef, sup)) % m == 0 for x in range(3)):
                    found = True
                    break
            if not found:
                ok = False
                break
        if ok:
            return True
    return False

for k in range(1, 5):
    print(k, solvable(k))

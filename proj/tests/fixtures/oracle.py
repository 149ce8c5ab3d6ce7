"""Closed-form values for tests/fixtures/oracle_expected.json.

Matrix means use the A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2} form via numpy.
"""
import json
import numpy as np


def mpow(m, t):
    w, v = np.linalg.eigh(m)
    return (v * w**t) @ v.T


def sharp(a, b, t):
    ah, aih = mpow(a, 0.5), mpow(a, -0.5)
    return ah @ mpow(aih @ b @ aih, t) @ ah


def nabla(a, b, t):
    return (1 - t) * a + t * b


def harm(a, b, t):
    return np.linalg.inv(nabla(np.linalg.inv(a), np.linalg.inv(b), t))


def power(a, b, u, t):
    ah, aih = mpow(a, 0.5), mpow(a, -0.5)
    x = aih @ b @ aih
    w, v = np.linalg.eigh(x)
    fx = (v * ((1 - t) + t * w**u) ** (1 / u)) @ v.T
    return ah @ fx @ ah


def sgeo(a, b, t):
    return a ** (1 - t) * b**t


def sharm(a, b, t):
    return 1 / ((1 - t) / a + t / b)


inv = lambda x: 1 / x
out = {}
out["scalar_power_means_1_4"] = [sharm(1, 4, .5), ((1 + .5) / 2) ** -2, 2.0, ((1 + 2) / 2) ** 2, 2.5]
out["geometric_mean_quarter_2_8"] = [2 ** .75 * 8 ** .25]
A = np.array([[2., 1.], [1., 1.]])
B = np.array([[1., 0.], [0., 3.]])
out["geometric_mean_2x2"] = sharp(A, B, .5).ravel().tolist()
out["geometric_mean_2x2_third"] = sharp(A, B, 1 / 3).ravel().tolist()
out["harmonic_mean_2x2"] = harm(A, B, .25).ravel().tolist()
out["power_mean_2x2_half"] = power(A, B, .5, .5).ravel().tolist()

a, b = 4., 1.
m = (a + b) / 2
x, y = (m + a) / 2, (m + b) / 2
out["T21_inverse_4_1"] = [1 / m, sgeo(1 / x, 1 / y, .5), sgeo(1 / a, 1 / b, .5)]
out["R23_inverse_4_1"] = [1 / nabla(4, 1, .25), sgeo(1 / 4, 1, .25)]
out["C22_inverse_2_1"] = [1 / 3, 1 / np.sqrt(3.5 * 2.5), 1 / np.sqrt(8), (1 / 4 + 1 / 2) / 2, (1 / 2 + 1) / 2]
out["C24_sqrt_4_1"] = [np.sqrt(2.0), (x * y) ** .25, np.sqrt(m)]
out["R25_inverse_4_1"] = [1 / m, sharm(1 / x, 1 / y, .5), sharm(1 / a, 1 / b, .5), .5, .5]
g = 2.0
p, q = np.sqrt(2.0), np.sqrt(8.0)
out["T25_1_4"] = [sharm(1, 4, .5), sharm(p, q, .5), g, (p + q) / 2, 2.5]
out["T25_4_1"] = [sharm(4, 1, .5), sharm(q, p, .5), g, (p + q) / 2, 2.5]
out["C27_3_m1_0"] = [2.0, 2.0, 4.0]
ra = (abs(1.5 * 3 - .5 * 2) + abs(.5 * 3 + .5 * 2) - 2) / 2
rb = (abs(1.5 * 1 - .5 * 6) + abs(.5 * 1 + .5 * 6) - 6) / 2
out["R27_3_1_half"] = [2.0, ra, 2.0, -2.0, rb, 2.0]
# diag(1,4) and diag(4,1) under the block sum: G = 2I, P = diag(sqrt2, sqrt8), Q = diag(sqrt8, sqrt2)
out["T31_block_sum_diag"] = [4.0, 3 * np.sqrt(2.0), 5.0]
out["E18_pairs"] = [4.0, 3 * np.sqrt(2.0), 5.0]
A2, B2 = np.diag([1., 4.]), np.diag([9., 1.])
tr = lambda z: np.trace(z) / 2
out["R33_trace_diag"] = [tr(nabla(A2, B2, .5))] * 3
G2 = sharp(A2, B2, .5)
out["T32_trace_diag"] = [tr(G2), sgeo(tr(sharp(G2, A2, .5)), tr(sharp(G2, B2, .5)), .5),
                         sgeo(tr(A2), tr(B2), .5)]
out = {k: [float(v) for v in vs] for k, vs in sorted(out.items())}
print(json.dumps(out, indent=2))

"""Tour of the scalar algebra: the two extra square roots of +1, zero
divisors, the sign-indefinite quadratic form, and what still works in
spite of it (inverses, square roots, consimilarity)."""

from sqmat.scalar import (
    SplitQuaternion,
    canonical_witness,
    classify,
    conjugate,
    inverse,
    mul,
    norm,
    quadratic_form,
    solve_consimilarity,
    sqrt,
)

ONE = SplitQuaternion(1)
I = SplitQuaternion(0, 1, 0, 0)
J = SplitQuaternion(0, 0, 1, 0)
K = SplitQuaternion(0, 0, 0, 1)


def show(label, value):
    print("  %-28s %s" % (label, value))


print("== products that set this algebra apart")
show("i * i =", mul(I, I))
show("j * j =", mul(J, J))
show("k * k =", mul(K, K))
show("i * j =", mul(I, J))
show("j * i =", mul(J, I))

print("\n== the quadratic form splits the algebra into three characters")
for q in (ONE + I, SplitQuaternion(0, 1, 2, 0), ONE + J):
    show("I_q of %s =" % q, "%g -> %s" % (quadratic_form(q),
                                          classify(q).value))

print("\n== null elements are zero divisors")
n = ONE + J
show("(1+j) * (1-j) =", mul(n, conjugate(n)))

print("\n== invertible elements still invert cleanly")
t = SplitQuaternion(2, 1, 1, 0)
show("t =", t)
show("t^-1 =", inverse(t))
show("t * t^-1 =", mul(t, inverse(t)))

print("\n== square roots come in pairs when a root exists at all")
a = SplitQuaternion(0, 2, 0, 0)
r1, r2 = sqrt(a)
show("sqrt(2i) =", "%s and %s" % (r1, r2))
show("check r^2 =", mul(r1, r1))

print("\n== a same-norm witness links timelike values to their norm")
b = SplitQuaternion(0, 2, 0, 0)
show("norm(2i) =", norm(b))
p = canonical_witness(b)
show("witness p:", p)
show("b p - conj(p) norm(b) =", mul(b, p) - mul(conjugate(p),
                                                SplitQuaternion(norm(b))))

print("\n== consimilarity a x = conj(x) b has whole families of solutions")
family = solve_consimilarity(I, -I)
show("kind for (i, -i):", family.kind.value)
show("generator:", family.generator)
x = family.generator
show("a x - conj(x) b =", mul(I, x) - mul(conjugate(x), -I))

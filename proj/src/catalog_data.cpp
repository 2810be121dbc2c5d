// The built-in registry: presentation templates for the nonabelian groups of
// order p^5 (p >= 5) organised by isoclinism family, the representation
// groups used to read twisted block structures off ordinary characters, two
// order-p^6 certificate pairs, the product examples, the extraspecial
// families, and small abelian groups.  Entries that carry no presentation
// (`external: yes`) contribute multiplier expectations only; `sflag` marks
// groups whose comparison is deliberately left unresolved.

namespace tgrip {

const char* kCatalogRegistry = R"reg(
# ---------------------------------------------------------------- family 2

group Phi2(32)a1
family: Phi2
minp: 5
h2: p
order: p^5
abelianization: p^2, p^2
gens: a(p^2) a1(p^2) a2(p)
pow a = a2
comm a1 a = a2
equiv: Phi2(32)a1
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p]
expects: nontrivial = p x [p^2]
end

group Phi14(42)
family: Phi14
minp: 5
repgroup-of: Phi2(32)a1
order: p^6
gens: a2(p^2) a1(p^2) b(p^2)
pow a1 = b
comm a1 a2 = b
kernel: b^p
corr: a -> a1, a1 -> a2^-1, a2 -> b
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p] + (p^2-p) x [p^2]
end

group Phi2(32)a2
family: Phi2
minp: 5
h2: p
order: p^5
abelianization: p, p^3
gens: a(p^3) a1(p) a2(p)
pow a1 = a2
comm a1 a = a2
equiv: Phi2(32)a1
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p]
expects: nontrivial = p x [p^2]
end

group Phi8(33)
family: Phi8
minp: 5
repgroup-of: Phi2(32)a2
order: p^6
gens: a2(p^3) a1(p) b(p) d(p)
pow a1 = b
pow b = d
comm a1 a2 = b
comm b a2 = d
kernel: b^p
corr: a -> a2, a1 -> a1, a2 -> b
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p] + (p^2-p) x [p^2]
end

group Phi2(311)a
family: Phi2
minp: 5
h2: p, p
order: p^5
abelianization: p, p, p^2
gens: a(p^2) a1(p) b(p) y(p)
pow a = y
comm a1 a = y
equiv: Phi2(311)a
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p]
expects: nontrivial = p^3 x [p]
end

group Phi2(311)a.rep
family: Phi2
minp: 5
repgroup-of: Phi2(311)a
order: p^7
gens: a(p^2) a1(p) b(p) b1(p) b2(p) y(p)
pow a = y
comm a1 a = y
comm b a = b1
comm b a1 = b2
kernel: b1, b2
corr: a -> a, a1 -> a1, b -> b, y -> y
expects: ordinary = p^4 x [1] + (p^5-p^2) x [p]
end

group Phi2(311)b
family: Phi2
minp: 5
h2: p, p
order: p^5
abelianization: p, p, p^2
gens: a(p) a1(p) c(p^2) y(p)
pow c = y
comm a1 a = y
equiv: Phi2(311)a
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p]
expects: nontrivial = p^3 x [p]
end

group Phi2(311)b.rep
family: Phi2
minp: 5
repgroup-of: Phi2(311)b
order: p^7
gens: a(p) a1(p) c(p^2) b1(p) b2(p) y(p)
pow c = y
comm a1 a = y
comm c a1 = b1
comm c a = b2
kernel: b1, b2
corr: a -> a, a1 -> a1, c -> c, y -> y
expects: ordinary = p^4 x [1] + (p^5-p^2) x [p]
end

group Phi2(311)c
family: Phi2
minp: 5
h2: p, p
order: p^5
abelianization: p, p^3
gens: a(p^3) a1(p) a2(p)
comm a1 a = a2
equiv: Phi2(311)a
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p]
expects: nontrivial = p^3 x [p]
end

group Phi2(311)c.rep
family: Phi2
minp: 5
repgroup-of: Phi2(311)c
order: p^7
gens: a(p^3) a1(p) a2(p) b1(p) b2(p)
comm a1 a = a2
comm a2 a = b1
comm a2 a1 = b2
kernel: b1, b2
corr: a -> a, a1 -> a1, a2 -> a2
expects: ordinary = p^4 x [1] + (p^5-p^2) x [p]
end

group Phi2(221)a
family: Phi2
minp: 5
h2: p, p, p
order: p^5
abelianization: p, p, p^2
gens: a(p) a1(p^2) c(p) y(p)
pow a = y
comm a1 a = y
equiv: Phi2(221)a
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p]
end

group Phi2(221)a.rep
family: Phi2
minp: 5
repgroup-of: Phi2(221)a
order: p^8
gens: a2(p^2) a1(p) w(p) b(p) b1(p) b2(p) d(p)
pow a1 = b
pow b = d
comm a1 a2 = b
comm b a2 = d
comm w a1 = b1
comm w a2 = b2
kernel: b^p, b1, b2
corr: a -> a1, a1 -> a2^-1, c -> w, y -> b
expects: ordinary = p^4 x [1] + (p^5-p^2) x [p] + (p^4-p^3) x [p^2]
end

group Phi2(221)b
family: Phi2
minp: 5
h2: p, p
order: p^5
abelianization: p, p, p^2
gens: a(p) b(p) y(p) c(p^2)
pow a = y
comm b a = y
shortcut: y
equiv: Phi2(311)a
note: modular p^3 times C_p^2, with the forced-type route applying over Z = G'
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p]
expects: nontrivial = p^3 x [p]
end

group Phi2(221)c
family: Phi2
minp: 5
external: yes
h2: p, p^2
equiv: Phi2(221)c
end

group Phi2(221)d
family: Phi2
minp: 5
h2: p, p, p
order: p^5
abelianization: p^2, p^2
gens: a(p^2) a1(p^2) a2(p)
comm a1 a = a2
equiv: Phi2(221)a
expects: ordinary = p^4 x [1] + (p^3-p^2) x [p]
end

group Phi2(221)d.rep
family: Phi2
minp: 5
repgroup-of: Phi2(221)d
order: p^8
gens: a(p^2) a1(p^2) a2(p^2) a3(p) a4(p)
comm a1 a = a2
comm a2 a = a3
comm a2 a1 = a4
kernel: a2^p, a3, a4
corr: a -> a, a1 -> a1, a2 -> a2
expects: ordinary = p^4 x [1] + (p^5-p^2) x [p] + (p^4-p^3) x [p^2]
end

group Phi2(41)
family: Phi2
minp: 5
external: yes
h2: 1
equiv: Phi2(41)
end

group Phi2(2111)a
family: Phi2
minp: 5
external: yes
h2: p, p, p, p, p
end

group Phi2(2111)b
family: Phi2
minp: 5
external: yes
h2: p, p, p, p, p
end

group Phi2(2111)c
family: Phi2
minp: 5
external: yes
h2: p, p, p, p
end

group Phi2(2111)d
family: Phi2
minp: 5
external: yes
h2: p, p, p, p
end

group Phi2(11111)
family: Phi2
minp: 5
external: yes
h2: p, p, p, p, p, p, p
equiv: Phi2(11111)
end

# ---------------------------------------------------------------- family 3

group Phi3(311)a
family: Phi3
minp: 5
external: yes
h2: p
end

group Phi3(311)br
family: Phi3
minp: 5
param: r
external: yes
h2: p
end

group Phi3(221)a
family: Phi3
minp: 5
external: yes
h2: p
end

group Phi3(221)br
family: Phi3
minp: 5
param: r
external: yes
sflag: yes
h2: p, p
note: equivalence left unresolved -- comparisons report UNKNOWN
end

group Phi3(2111)a
family: Phi3
minp: 5
external: yes
h2: p, p, p
end

group Phi3(2111)br
family: Phi3
minp: 5
param: r
external: yes
h2: p, p, p
end

group Phi3(2111)c
family: Phi3
minp: 5
external: yes
h2: p, p, p
end

group Phi3(2111)d
family: Phi3
minp: 5
h2: p, p
order: p^5
abelianization: p, p^2
center: p^2
gens: a(p^2) a1(p) a2(p) a3(p)
comm a1 a = a2
comm a2 a = a3
equiv: Phi3(2111)d
expects: ordinary = p^3 x [1] + (p^3-p) x [p]
end

group Phi3(2111)d.rep
family: Phi3
minp: 5
repgroup-of: Phi3(2111)d
order: p^7
gens: a(p^2) a1(p) a2(p) a3(p) a4(p) g(p)
comm a1 a = a2
comm a2 a = a3
comm a3 a = a4
comm a1 a2 = g
kernel: g, a4
corr: a -> a, a1 -> a1, a2 -> a2, a3 -> a3
expects: ordinary = p^3 x [1] + (2*p^4-p^3-p) x [p] + (p^3-2*p^2+p) x [p^2]
end

group Phi3(2111)e
family: Phi3
minp: 5
h2: p, p
order: p^5
abelianization: p, p^2
center: p^2
gens: a(p) a1(p^2) a2(p) a3(p)
comm a1 a = a2
comm a2 a = a3
equiv: Phi3(2111)d
expects: ordinary = p^3 x [1] + (p^3-p) x [p]
end

group Phi3(2111)e.rep
family: Phi3
minp: 5
repgroup-of: Phi3(2111)e
order: p^7
gens: a(p) a1(p^2) a2(p) a3(p) a4(p) g(p)
comm a1 a = a2
comm a2 a = a3
comm a3 a = a4
comm a1 a2 = g
kernel: g, a4
corr: a -> a, a1 -> a1, a2 -> a2, a3 -> a3
expects: ordinary = p^3 x [1] + (2*p^4-p^3-p) x [p] + (p^3-2*p^2+p) x [p^2]
end

group Phi3(11111)
family: Phi3
minp: 5
external: yes
h2: p, p, p, p
equiv: Phi3(11111)
end

# ---------------------------------------------------------------- family 4

group Phi4(221)a
family: Phi4
minp: 5
external: yes
h2: p
end

group Phi4(221)b
family: Phi4
minp: 5
external: yes
sflag: yes
h2: p, p
note: equivalence left unresolved -- comparisons report UNKNOWN
end

group Phi4(221)c
family: Phi4
minp: 5
external: yes
h2: p
end

group Phi4(221)dr
family: Phi4
minp: 5
param: r
external: yes
h2: p
note: valid for r different from (p-1)/2
end

group Phi4(221)dhalf
family: Phi4
minp: 5
external: yes
sflag: yes
h2: p^2
note: the r = (p-1)/2 member of the d family -- left unresolved
end

group Phi4(221)e
family: Phi4
minp: 5
external: yes
h2: p
end

group Phi4(221)fr
family: Phi4
minp: 5
param: r
external: yes
h2: p
note: valid for r different from 0
end

group Phi4(221)f0
family: Phi4
minp: 5
external: yes
sflag: yes
h2: p^2
note: the r = 0 member of the f family -- left unresolved
end

group Phi4(2111)a
family: Phi4
minp: 5
external: yes
h2: p, p, p
end

group Phi4(2111)b
family: Phi4
minp: 5
external: yes
h2: p, p, p
end

group Phi4(2111)c
family: Phi4
minp: 5
external: yes
h2: p, p, p
end

group Phi4(11111)
family: Phi4
minp: 5
external: yes
h2: p, p, p, p, p, p
equiv: Phi4(11111)
end

# ---------------------------------------------------------------- family 5

group Phi5(2111)
family: Phi5
minp: 5
external: yes
h2: p, p, p, p, p
end

group Phi5(11111)
family: Phi5
minp: 5
external: yes
h2: p, p, p, p, p
end

# ---------------------------------------------------------------- family 6

group Phi6(221)a
family: Phi6
minp: 5
external: yes
h2: 1
end

group Phi6(221)br
family: Phi6
minp: 5
param: r
external: yes
h2: 1
note: valid for r different from (p-1)/2
end

group Phi6(221)bhalf
family: Phi6
minp: 5
external: yes
h2: p
equiv: Phi6(221)bhalf
note: the r = (p-1)/2 member of the b family -- representation groups of
note: order p^6 and p^7 live outside this registry
expects: ordinary = p^2 x [1] + (p^3-1) x [p]
expects: nontrivial = p x [p^2]
end

group Phi6(221)cr
family: Phi6
minp: 5
param: r
external: yes
h2: 1
end

group Phi6(221)dr
family: Phi6
minp: 5
param: r
external: yes
h2: 1
note: valid for r different from 0
end

group Phi6(221)d0
family: Phi6
minp: 5
external: yes
h2: p
equiv: Phi6(221)bhalf
note: the r = 0 member of the d family -- representation groups live
note: outside this registry
expects: ordinary = p^2 x [1] + (p^3-1) x [p]
expects: nontrivial = p x [p^2]
end

group Phi6(2111)a
family: Phi6
minp: 5
h2: p
order: p^5
abelianization: p, p
center: p^2
gens: a2(p) a1(p) b(p) b1(p) b2(p)
pow a1 = b1
comm a1 a2 = b
comm b a1 = b1
comm b a2 = b2
equiv: Phi6(2111)a
expects: ordinary = p^2 x [1] + (p^3-1) x [p]
expects: nontrivial = p^2 x [p] + (p-1) x [p^2]
end

group Phi6(2111)a.rep
family: Phi6
minp: 5
repgroup-of: Phi6(2111)a
order: p^6
gens: a2(p) a1(p) b(p) b1(p) b2(p) b3(p)
pow a1 = b1
comm a1 a2 = b
comm b a1 = b1
comm b a2 = b2
comm b2 a2 = b3
kernel: b3
corr: a2 -> a2, a1 -> a1, b -> b, b1 -> b1, b2 -> b2
expects: ordinary = p^2 x [1] + (2*p^3-p^2-1) x [p] + (p^2-2*p+1) x [p^2]
end

group Phi6(2111)br
family: Phi6
minp: 5
param: r
external: yes
h2: p
equiv: Phi6(2111)a
end

group Phi6(11111)
family: Phi6
minp: 5
external: yes
sflag: yes
h2: p, p, p
note: equivalence left unresolved -- comparisons report UNKNOWN
end

# ---------------------------------------------------------------- family 7

group Phi7(2111)a
family: Phi7
minp: 5
external: yes
h2: p, p, p
end

group Phi7(2111)br
family: Phi7
minp: 5
param: r
external: yes
h2: p, p, p
end

group Phi7(2111)c
family: Phi7
minp: 5
external: yes
h2: p, p, p
end

group Phi7(11111)
family: Phi7
minp: 5
external: yes
h2: p, p, p, p
equiv: Phi7(11111)
end

# ---------------------------------------------------------------- family 8

group Phi8(32)
family: Phi8
minp: 5
external: yes
h2: 1
equiv: Phi8(32)
end

# ---------------------------------------------------------------- family 9

group Phi9(2111)a
family: Phi9
minp: 5
h2: p
order: p^5
abelianization: p, p
center: p
gens: a(p) a1(p) a2(p) a3(p) a4(p)
pow a = a4
comm a1 a = a2
comm a2 a = a3
comm a3 a = a4
equiv: Phi6(2111)a
expects: ordinary = p^2 x [1] + (p^3-1) x [p]
expects: nontrivial = p^2 x [p] + (p-1) x [p^2]
end

group Phi9(2111)a.rep
family: Phi9
minp: 5
repgroup-of: Phi9(2111)a
order: p^6
gens: a2(p) a1(p) b(p) b1(p) b2(p) b3(p)
pow a2 = b3
comm a1 a2 = b
comm b a1 = b1
comm b a2 = b2
comm b2 a2 = b3
kernel: b1
corr: a -> a2, a1 -> a1, a2 -> b, a3 -> b2, a4 -> b3
expects: ordinary = p^2 x [1] + (2*p^3-p^2-1) x [p] + (p^2-2*p+1) x [p^2]
end

group Phi9(2111)br
family: Phi9
minp: 5
param: r
h2: p
order: p^5
abelianization: p, p
center: p
gens: a(p) a1(p) a2(p) a3(p) a4(p)
pow a1 = a4^r
comm a1 a = a2
comm a2 a = a3
comm a3 a = a4
equiv: Phi6(2111)a
expects: ordinary = p^2 x [1] + (p^3-1) x [p]
expects: nontrivial = p^2 x [p] + (p-1) x [p^2]
end

group Phi9(11111)
family: Phi9
minp: 5
external: yes
h2: p, p, p
equiv: Phi9(11111)
end

# --------------------------------------------------------------- family 10

group Phi10(2111)ar
family: Phi10
minp: 5
param: r
external: yes
h2: p
end

group Phi10(2111)br
family: Phi10
minp: 5
param: r
external: yes
h2: p
end

group Phi10(11111)
family: Phi10
minp: 5
external: yes
h2: p, p, p
equiv: Phi10(11111)
end

# ------------------------------------------------- order p^6 cert pairs ---

group Phi12(214)b
family: Phi12
minp: 3
order: p^6
abelianization: p, p, p, p
center: p^2
gens: b1(p) b2(p) a1(p) a2(p) g1(p) g2(p)
pow a1 = g1 g2
comm a1 b1 = g1
comm a2 b2 = g2
equiv: Phi12(214)b
end

group Phi12(214)e
family: Phi12
minp: 3
order: p^6
abelianization: p, p, p, p
center: p^2
gens: b1(p) b2(p) a1(p) a2(p) g1(p) g2(p)
pow a1 = g1 g2
pow a2 = g1 g2
comm a1 b1 = g1
comm a2 b2 = g2
equiv: Phi12(214)b
end

group Phi5(214)c
family: Phi5
minp: 3
order: p^6
abelianization: p, p, p, p^2
center: p^2
gens: a2(p) a4(p) a1(p^2) a3(p) b1(p)
comm a1 a2 = b1
comm a3 a4 = b1
equiv: Phi5(214)c
end

group Phi5(2211)b
family: Phi5
minp: 3
order: p^6
abelianization: p, p, p, p^2
center: p^2
gens: a2(p) a4(p) a1(p^2) a3(p) b2(p)
pow a3 = b2
comm a1 a2 = b2
comm a3 a4 = b2
equiv: Phi5(214)c
end

# --------------------------------------------------------------- products ---

group Ex1G1
family: examples
minp: 3
order: p^4
abelianization: p, p, p
gens: c(p) b(p) a(p) y(p)
pow a = y
comm b c = y
equiv: Ex1G1
end

group Ex1H1
family: examples
minp: 3
order: p^4
abelianization: p, p^2
gens: c(p) a(p) b(p) y(p)
pow a = y
comm a c = b
equiv: Ex1G1
end

group Ex1G
family: examples
minp: 3
order: p^5
abelianization: p, p, p, p
gens: c(p) b(p) a(p) y(p) d(p)
pow a = y
comm b c = y
note: Ex1G1 times C_p -- not equivalent to Ex1H even though the factors are
end

group Ex1H
family: examples
minp: 3
order: p^5
abelianization: p, p, p^2
gens: c(p) a(p) b(p) y(p) d(p)
pow a = y
comm a c = b
note: Ex1H1 times C_p
end

group Ex2G
family: examples
minp: 3
order: p^5
h2: p, p
abelianization: p, p, p^2
gens: a(p) b(p) y(p) c(p^2)
pow a = y
comm b a = y
shortcut: y
note: same group as Phi2(221)b
end

group Ex2H
family: examples
minp: 3
order: p^5
h2: p, p
abelianization: p, p, p^2
gens: a(p^2) b(p) c(p) y(p)
pow a = y
comm b a = y
note: same group as Phi2(311)a
end

group Ex3H1
family: examples
minp: 3
order: p^4
abelianization: p, p, p
gens: c(p) a(p) b(p) y(p)
pow a = y
comm a c = y
equiv: Ex1G1
note: stays equivalent to Ex1G1 after crossing with any finite abelian group
end

# ----------------------------------------------------------- extraspecial ---

group ESp
family: extraspecial
minp: 3
param: r
builtin: extraspecial p
order: p^(2*r+1)
center: p
expects: ordinary = p^(2*r) x [1] + (p-1) x [p^r]
note: exponent p -- r central factors of order p^3
end

group ESp2
family: extraspecial
minp: 3
param: r
builtin: extraspecial p^2
order: p^(2*r+1)
center: p
expects: ordinary = p^(2*r) x [1] + (p-1) x [p^r]
note: exponent p^2 -- r central factors of order p^3
end

# ---------------------------------------------------------------- abelian ---

group C(p)
family: abelian
minp: 3
h2: 1
order: p
gens: a(p)
expects: ordinary = p x [1]
end

group C(p^2)
family: abelian
minp: 3
h2: 1
order: p^2
gens: a(p^2)
expects: ordinary = p^2 x [1]
end

group C(p^3)
family: abelian
minp: 3
h2: 1
order: p^3
gens: a(p^3)
expects: ordinary = p^3 x [1]
end

group C(pxp)
family: abelian
minp: 3
h2: p
order: p^2
gens: a(p) b(p)
expects: ordinary = p^2 x [1]
end

group C(p^2xp)
family: abelian
minp: 3
h2: p
order: p^3
gens: a(p^2) b(p)
expects: ordinary = p^3 x [1]
end

group C(pxpxp)
family: abelian
minp: 3
h2: p, p, p
order: p^3
gens: a(p) b(p) c(p)
expects: ordinary = p^3 x [1]
end

# ------------------------------------------------------------ certificates ---

cert quotient Phi12(214)b Phi12(214)e
z1: g1 g2
z2: g1 g2
i: g1 g2
phi: b1 -> b1, b2 -> b2, a1 -> a1, a2 -> a2, g1 -> g1, g2 -> g2
end

cert quotient Phi9(2111)a Phi9(2111)br
z1: a4
z2: a4
i: a4
phi: a -> a, a1 -> a1, a2 -> a2, a3 -> a3, a4 -> a4
end

cert centralproduct Phi5(214)c Phi5(2211)b
factors1: a1 a2 b1 | a3 a4 b1
factors2: a1 a2 b2 | a3 a4 b2
z1: b1
z2: b2
i: b1
phi: a1 -> a1, a2 -> a2, a3 -> a3, a4 -> a4, b2 -> b1
end
)reg";

}  // namespace tgrip

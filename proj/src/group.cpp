#include "fst/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fst {

int FiniteGroup::element_order(int a) const {
    int x = a, m = 1;
    while (x != identity) {
        x = mul(x, a);
        ++m;
    }
    return m;
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& table,
                           const std::string& name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error("empty multiplication table");
    if (n > 256) throw Error("group order " + std::to_string(n) + " exceeds the 256-element cap");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw NotLatinSquare(a, -1, "row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n)
                throw NotLatinSquare(a, b, "entry (" + std::to_string(a) + "," +
                                               std::to_string(b) + ") out of range");
    }

    // Latin square: each row and each column is a permutation.
    for (int a = 0; a < n; ++a) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int b = 0; b < n; ++b) {
            if (row[table[a][b]]++)
                throw NotLatinSquare(a, b, "row " + std::to_string(a) +
                                               " repeats value " + std::to_string(table[a][b]));
            if (col[table[b][a]]++)
                throw NotLatinSquare(b, a, "column " + std::to_string(a) +
                                               " repeats value " + std::to_string(table[b][a]));
        }
    }

    int identity = -1;
    for (int cand = 0; cand < n && identity < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table[cand][a] == a && table[a][cand] == a;
        if (ok) identity = cand;
    }
    if (identity < 0) throw NoIdentity("table admits no two-sided identity");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw NotAssociative(a, b, c,
                                         "associativity fails at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");

    FiniteGroup g;
    g.order = n;
    g.table = table;
    g.identity = identity;
    g.name = name;
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == identity) {
                g.inverse[a] = b;
                break;
            }
        }
        // A Latin square with identity always has a right inverse; it is
        // two-sided once associativity holds.
    }
    return g;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
    for (int s : generators)
        if (s < 0 || s >= g.order)
            throw Error("generator index " + std::to_string(s) + " out of range");

    std::vector<int> gens(generators);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Subgroup k;
    k.member_rank.assign(g.order, -1);
    std::deque<int> queue{g.identity};
    k.member_rank[g.identity] = 0;
    k.members.push_back(g.identity);
    while (!queue.empty()) {
        const int a = queue.front();
        queue.pop_front();
        for (int s : gens) {
            const int x = g.mul(a, s);
            if (k.member_rank[x] < 0) {
                k.member_rank[x] = static_cast<int>(k.members.size());
                k.members.push_back(x);
                queue.push_back(x);
            }
        }
    }
    // Closure under right multiplication by generators already yields a
    // subgroup of a finite group (inverses are positive powers).
    return k;
}

CosetStructure coset_decompose(const FiniteGroup& g, const Subgroup& k) {
    CosetStructure cs;
    cs.factor.assign(g.order, {-1, -1});

    std::vector<int> rep_of(g.order, -1);
    // Identity coset first (its representative is the identity itself);
    // all other cosets get their minimal element, listed ascending.
    cs.reps.push_back(g.identity);
    for (int kk : k.members) rep_of[g.mul(g.identity, kk)] = g.identity;
    for (int a = 0; a < g.order; ++a) {
        if (rep_of[a] >= 0) continue;
        cs.reps.push_back(a);
        for (int kk : k.members) rep_of[g.mul(a, kk)] = a;
    }
    std::sort(cs.reps.begin() + 1, cs.reps.end());

    for (int r = 0; r < cs.index(); ++r) {
        const int gr = cs.reps[r];
        for (int kk : k.members) cs.factor[g.mul(gr, kk)] = {r, kk};
    }
    return cs;
}

HaarWeights haar_weights(const FiniteGroup&, const Subgroup& k) {
    HaarWeights w;
    w.nu = Rational(1, k.size());
    w.mu = Rational(1, 1);
    w.lambda = w.mu * w.nu;
    return w;
}

}  // namespace fst

#include "ybx/words.hpp"

#include <set>

#include "ybx/error.hpp"

namespace ybx {

Word canonical_form(Structure& s, Flavor f, std::span<const int> word) {
    GradedMonoid& g = s.monoid(f);
    return g.canonical(static_cast<int>(word.size()), g.class_of(word));
}

bool equal(Structure& s, Flavor f, std::span<const int> u, std::span<const int> v) {
    return s.monoid(f).equal(u, v);
}

Growth growth(Structure& s, Flavor f, int max_length) {
    Growth g;
    g.flavor = f;
    GradedMonoid& mon = s.monoid(f);
    for (int L = 0; L <= max_length; ++L) {
        try {
            g.h.push_back(mon.class_count(L));
        } catch (const ResourceLimit& e) {
            g.limited_at = L;
            g.limit_message = e.what();
            break;
        }
    }
    return g;
}

Map lambda_of(const Structure& s, std::span<const int> word) { return s.lambda_of(word); }

ClassRef cocycle_pi(Structure& s, std::span<const int> m_word) {
    const int L = static_cast<int>(m_word.size());
    return {Flavor::A, L, s.class_pi(L, s.M().class_of(m_word))};
}

ClassRef cocycle_pi_inverse(Structure& s, ClassRef a_class) {
    if (a_class.flavor != Flavor::A) throw InvalidInput("expected an A-class");
    Word w = s.pi_inverse_word(s.A().canonical(a_class));
    return s.M().ref_of(w);
}

Subset left_divisors(Structure& s, ClassRef c) { return s.monoid(c.flavor).first_letters(c.length, c.id); }

ClassRef apply_automorphism(Structure& s, const Map& g, ClassRef c) {
    if (c.flavor != Flavor::A) throw InvalidInput("automorphisms act on A-classes");
    GradedMonoid& a = s.A();
    const int n = s.size();
    // image table level by level; every node of a class must land in the same class
    std::vector<int> img{0};
    for (int l = 1; l <= c.length; ++l) {
        const Level& lv = a.level(l);
        std::vector<int> next(lv.count, -1);
        for (std::size_t node = 0; node < lv.trans.size(); ++node) {
            const int p = static_cast<int>(node / n), x = static_cast<int>(node % n);
            const int target = a.append(l - 1, img[p], g[x]);
            int& slot = next[lv.trans[node]];
            if (slot >= 0 && slot != target) {
                Word w = a.canonical(l - 1, p);
                w.push_back(x);
                throw IllDefined("map " + to_string(g) + " does not respect A at word " + word_string(w));
            }
            slot = target;
        }
        img = std::move(next);
    }
    return {Flavor::A, c.length, img[c.id]};
}

CocycleCheck check_cocycle(Structure& s, int L) {
    CocycleCheck r;
    r.length = L;
    r.m_classes = s.M().class_count(L);
    r.a_classes = s.A().class_count(L);
    std::set<int> img;
    for (int id = 0; id < r.m_classes; ++id) img.insert(s.class_pi(L, id));
    r.bijective = static_cast<long long>(img.size()) == r.m_classes && r.m_classes == r.a_classes;
    return r;
}

}  // namespace ybx

#include "plethygen/tables.hpp"

namespace plethygen {

namespace {

struct Mono {
    std::int64_t z;
    std::int64_t q;
    std::int64_t c = 1;
};

ZQPoly num(std::initializer_list<Mono> ms) {
    ZQPoly p;
    for (const auto& m : ms) p.add_term(m.z, QLaurent::monomial(m.q, m.c));
    return p;
}

FactoredRational frac(std::initializer_list<Mono> ms,
                      std::vector<DenFactor> factors) {
    return FactoredRational(num(ms), std::move(factors));
}

FactoredRational sum(std::initializer_list<FactoredRational> terms) {
    FactoredRational acc = FactoredRational::zero();
    for (const auto& t : terms) acc = rational_add(acc, t);
    return acc;
}

std::vector<KnownForm> build_le4() {
    std::vector<KnownForm> v;
    v.push_back({{1}, frac({{0, 1}}, {{1, 1, 1}})});
    v.push_back({{2}, frac({{0, 1}}, {{0, 2, 1}, {2, 1, 1}})});
    v.push_back({{1, 1}, frac({{1, 1}}, {{0, 2, 1}, {2, 1, 1}})});
    v.push_back({{3}, frac({{0, 1}, {3, 4}}, {{0, 4, 1}, {2, 2, 1}, {3, 1, 1}})});
    v.push_back({{2, 1}, frac({{1, 2}}, {{0, 2, 1}, {1, 1, 1}, {3, 1, 1}})});
    v.push_back({{1, 1, 1}, frac({{2, 1}, {5, 4}}, {{0, 4, 1}, {2, 2, 1}, {3, 1, 1}})});
    v.push_back({{4}, frac({{0, 1}, {3, 7}},
                           {{0, 3, 1}, {0, 2, 1}, {4, 2, 1}, {4, 1, 1}})});
    v.push_back({{3, 1}, frac({{1, 3}}, {{0, 2, 1}, {0, 1, 1}, {2, 1, 1}, {4, 1, 1}})});
    v.push_back({{2, 2}, frac({{1, 1}, {4, 7}},
                              {{0, 3, 1}, {4, 2, 1}, {0, 1, 1}, {4, 1, 1}})});
    v.push_back({{2, 1, 1},
                 frac({{2, 3}}, {{0, 2, 1}, {0, 1, 1}, {2, 1, 1}, {4, 1, 1}})});
    v.push_back({{1, 1, 1, 1}, frac({{3, 1}, {6, 7}},
                                    {{0, 3, 1}, {0, 2, 1}, {4, 2, 1}, {4, 1, 1}})});
    return v;
}

FactoredRational a5() {
    return sum({
        frac({{4, 7}, {2, 7}, {3, 6}}, {{0, 8, 1}, {5, 1, 1}, {3, 1, 1}}),
        frac({{4, 5}}, {{0, 8, 1}, {5, 1, 1}, {3, 1, 1}, {1, 1, 1}}),
        frac({{8, 5}}, {{0, 8, 1}, {5, 1, 1}, {3, 1, 1}, {1, 1, 1}, {0, 2, 1}}),
        frac({{8, 3}}, {{0, 8, 1}, {5, 1, 1}, {0, 4, 1}}),
        frac({{8, 7}, {7, 6}, {6, 5}}, {{0, 8, 1}, {5, 1, 1}, {3, 1, 1}, {0, 2, 1}}),
        frac({{12, 3}, {2, 3}}, {{0, 8, 1}, {5, 1, 1}, {0, 4, 2}}),
        frac({{6, 7}, {7, 6}, {4, 5}}, {{0, 8, 1}, {5, 1, 1}, {3, 1, 1}, {0, 4, 1}}),
        frac({{5, 4}}, {{0, 8, 1}, {5, 1, 1}, {0, 4, 1}, {0, 2, 1}}),
        frac({{6, 7}, {7, 6}, {8, 5}},
             {{0, 8, 1}, {5, 1, 1}, {3, 1, 1}, {0, 4, 1}, {0, 2, 1}}),
        frac({{9, 4}, {3, 4}}, {{0, 8, 1}, {5, 1, 1}, {0, 4, 1}}),
        frac({{22, 5}, {20, 5}, {16, 5}, {14, 5}},
             {{0, 12, 1}, {0, 8, 1}, {5, 1, 1}, {0, 4, 1}, {1, 1, 1}}),
        frac({{5, 2}}, {{0, 8, 1}, {5, 1, 1}, {0, 2, 1}}),
        frac({{18, 1}, {0, 1}}, {{0, 12, 1}, {0, 8, 1}, {5, 1, 1}, {0, 4, 1}}),
        frac({{11, 2}}, {{0, 8, 1}, {5, 1, 1}, {0, 6, 1}, {0, 2, 1}}),
        frac({{15, 4}}, {{0, 12, 1}, {0, 8, 1}, {5, 1, 1}}),
        frac({{19, 4}}, {{0, 12, 1}, {0, 8, 1}, {5, 1, 1}, {0, 2, 1}}),
    });
}

FactoredRational a41() {
    return sum({
        frac({{6, 5}, {1, 4}, {3, 2}},
             {{5, 1, 1}, {3, 1, 1}, {1, 1, 1}, {0, 6, 1}, {0, 2, 1}}),
        frac({{2, 3}}, {{5, 1, 1}, {3, 1, 1}, {1, 1, 1}, {0, 4, 1}, {0, 2, 1}}),
        frac({{8, 3}}, {{5, 1, 1}, {1, 1, 1}, {0, 6, 1}, {0, 4, 1}, {0, 2, 1}}),
        frac({{6, 3}, {7, 2}}, {{3, 1, 1}, {1, 1, 1}, {0, 6, 1}, {0, 4, 1}, {0, 2, 1}}),
        frac({{4, 1}, {5, 2}}, {{5, 1, 1}, {3, 1, 1}, {0, 6, 1}, {0, 4, 1}, {0, 2, 1}}),
    });
}

FactoredRational a32() {
    return sum({
        frac({{6, 5}, {6, 1}, {10, 3}, {5, 4}, {3, 4}, {12, 3}},
             {{5, 1, 1}, {1, 1, 1}, {0, 8, 1}, {0, 6, 1}, {0, 4, 1}}),
        frac({{3, 6}, {13, 6}, {7, 8, 2}, {8, 7}},
             {{5, 1, 1}, {3, 1, 1}, {1, 1, 1}, {0, 8, 1}, {0, 6, 1}}),
        frac({{6, 5}, {6, 7}, {10, 7}, {8, 5}},
             {{5, 1, 1}, {3, 1, 1}, {1, 1, 1}, {0, 8, 1}, {0, 4, 1}}),
        frac({{4, 1}, {7, 2}, {1, 2}, {6, 3}, {12, 1}, {6, 3, 2}, {8, 1, 2}, {8, 3}},
             {{3, 1, 1}, {1, 1, 1}, {0, 8, 1}, {0, 6, 1}, {0, 4, 1}}),
        frac({{6, 7}, {7, 8}, {5, 4}, {4, 5}, {2, 7}, {7, 4}},
             {{5, 1, 1}, {3, 1, 1}, {1, 1, 1}, {0, 6, 1}, {0, 4, 1}}),
        frac({{3, 2}, {4, 3}, {5, 4}, {5, 6}, {4, 3}, {11, 2}, {11, 2}},
             {{5, 1, 1}, {3, 1, 1}, {0, 8, 1}, {0, 6, 1}, {0, 4, 1}}),
    });
}

FactoredRational a311() {
    return sum({
        frac({{4, 3}, {5, 2}, {6, 1}},
             {{3, 1, 1}, {1, 1, 1}, {0, 4, 2}, {0, 2, 1}}),
        frac({{5, 4}, {2, 5}},
             {{5, 1, 1}, {3, 1, 1}, {1, 1, 1}, {0, 4, 1}, {0, 2, 1}}),
        frac({{7, 8}, {2, 1}, {4, 3}, {5, 2}, {5, 6}, {4, 7}},
             {{5, 1, 1}, {3, 1, 1}, {1, 1, 1}, {0, 4, 2}}),
    });
}

std::vector<KnownForm> build_w5() {
    std::vector<KnownForm> v;
    v.push_back({{5}, a5()});
    v.push_back({{4, 1}, a41()});
    v.push_back({{3, 2}, a32()});
    v.push_back({{3, 1, 1}, a311()});
    return v;
}

}  // namespace

const std::vector<KnownForm>& weight_le4_forms() {
    static const std::vector<KnownForm> forms = build_le4();
    return forms;
}

const std::vector<KnownForm>& weight5_forms() {
    static const std::vector<KnownForm> forms = build_w5();
    return forms;
}

std::optional<FactoredRational> known_form(const Partition& mu) {
    for (const auto& f : weight_le4_forms())
        if (f.mu == mu) return f.value;
    for (const auto& f : weight5_forms())
        if (f.mu == mu) return f.value;
    return std::nullopt;
}

}  // namespace plethygen

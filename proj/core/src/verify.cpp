#include "qf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace qf {

namespace {

bool finite_classes(const FieldDescriptor& f) {
    return field_traits(f).square_class_count.has_value();
}

std::string fresh_variable(const FieldDescriptor& f) {
    static const char* candidates[] = {"x", "y", "z", "u", "v", "w", "s", "t"};
    for (const char* c : candidates)
        if (!f.variable_index(c)) return c;
    for (int i = 1;; ++i) {
        std::string name = "t" + std::to_string(i);
        if (!f.variable_index(name)) return name;
    }
}

SquareClass one_class(const FieldDescriptor& f) {
    return square_class(FieldElement::one(f));
}

// D_F(q) over a finite field by direct evaluation of q on every vector of
// F_p^n; the reference oracle several checks compare the engine against.
std::set<SquareClass> value_classes_by_enumeration(const QuadraticForm& q) {
    const auto& f = q.field();
    std::int64_t p = f.prime();
    std::size_t n = q.dim();
    std::vector<std::int64_t> a;
    a.reserve(n);
    for (const auto& e : q.entries()) a.push_back(std::get<Residue>(e.unit()).value);

    std::set<std::int64_t> values;
    std::vector<std::int64_t> v(n, 0);
    while (true) {
        std::int64_t val = 0;
        bool zero_vec = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] != 0) zero_vec = false;
            val = (val + a[i] * v[i] % p * v[i]) % p;
        }
        if (!zero_vec && val != 0) values.insert(val);
        std::size_t k = 0;
        while (k < n && ++v[k] == p) v[k++] = 0;
        if (k == n) break;
    }

    std::set<SquareClass> classes;
    for (auto val : values) classes.insert(square_class(FieldElement::from_integer(f, val)));
    return classes;
}

struct Ctx {
    const SweepConfig& cfg;
    EngineHooks hooks;
    CheckResult* out{nullptr};

    bool rep(const QuadraticForm& q, const FieldElement& a) const {
        return hooks.represents ? hooks.represents(q, a) : represents(q, a);
    }
    bool g(const QuadraticForm& q, const FieldElement& a) const {
        return hooks.in_G ? hooks.in_G(q, a) : in_G(q, a);
    }
    bool h(const QuadraticForm& q, const FieldElement& a) const {
        return hooks.in_H ? hooks.in_H(q, a) : in_H(q, a);
    }

    std::set<SquareClass> d_set(const QuadraticForm& q) const {
        std::set<SquareClass> s;
        for (const auto& c : square_class_reps(q.field()))
            if (rep(q, c.representative())) s.insert(c);
        return s;
    }
    std::set<SquareClass> g_set(const QuadraticForm& q) const {
        std::set<SquareClass> s;
        for (const auto& c : square_class_reps(q.field()))
            if (g(q, c.representative())) s.insert(c);
        return s;
    }
    std::set<SquareClass> h_set(const QuadraticForm& q) const {
        std::set<SquareClass> s;
        for (const auto& c : square_class_reps(q.field()))
            if (h(q, c.representative())) s.insert(c);
        return s;
    }

    void tick() const { ++out->population; }
    void fail(const FieldDescriptor& f, const std::string& form, const std::string& witness,
              const std::string& detail) const {
        if (out->counterexamples.size() < 25)
            out->counterexamples.push_back({f.render(), form, witness, detail});
        else if (out->counterexamples.size() == 25)
            out->counterexamples.push_back({"", "", "", "... further counterexamples suppressed"});
    }

    void sweep(const FieldDescriptor& f, std::size_t lo, std::size_t hi,
               const std::function<void(const QuadraticForm&)>& fn) const {
        for_each_form(f, lo, std::min(hi, cfg.max_dim), cfg.bounds.form_budget, fn);
    }

    std::vector<FieldDescriptor> fields_with(bool (*pred)(const FieldDescriptor&)) const {
        std::vector<FieldDescriptor> out_fields;
        for (const auto& f : cfg.fields)
            if (pred(f)) out_fields.push_back(f);
        return out_fields;
    }
    bool can_extend(const FieldDescriptor& f, std::size_t by) const {
        return f.tower().size() + by <= cfg.tower_depth_cap;
    }
};

bool subset_of(const std::set<SquareClass>& a, const std::set<SquareClass>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::set<SquareClass> product_set(const std::set<SquareClass>& a, const std::set<SquareClass>& b) {
    std::set<SquareClass> out;
    for (const auto& x : a)
        for (const auto& y : b)
            out.insert(square_class(x.representative().mul(y.representative())));
    return out;
}

// ---- checks -------------------------------------------------------------

void check_springer_additivity(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f) || !ctx.can_extend(f, 1)) continue;
        FieldDescriptor k = f.with_variable(fresh_variable(f));
        FieldElement xv = FieldElement::variable(k, k.outer_variable());
        std::size_t cap = std::min<std::size_t>(3, ctx.cfg.max_dim);
        ctx.sweep(f, 1, cap, [&](const QuadraticForm& p) {
            ctx.sweep(f, 1, cap, [&](const QuadraticForm& q) {
                ctx.tick();
                std::size_t lhs = witt_index(perp(lift(p, k), scale(xv, lift(q, k))));
                std::size_t rhs = witt_index(p) + witt_index(q);
                if (lhs != rhs)
                    ctx.fail(k, p.render() + " perp " + k.outer_variable() + "*" + q.render(), "",
                             "i = " + std::to_string(lhs) + ", parts sum to " +
                                 std::to_string(rhs));
            });
        });
    }
}

void check_roussey(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (f.base() != BaseField::finite || f.has_tower()) continue;
        ctx.sweep(f, 1, 3, [&](const QuadraticForm& q) {
            ctx.tick();
            auto d_enum = value_classes_by_enumeration(q);
            auto dd = product_set(d_enum, d_enum);
            auto h = ctx.h_set(q);
            if (dd != h)
                ctx.fail(f, q.render(), "",
                         "H(q) and D(q)D(q) (by vector enumeration) differ");
        });
    }
}

void check_group_iff(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        bool enumerable = f.base() == BaseField::finite && !f.has_tower();
        ctx.sweep(f, 1, ctx.cfg.max_dim, [&](const QuadraticForm& q) {
            ctx.tick();
            bool engine = is_group(q);
            auto d = ctx.d_set(q);
            auto h = ctx.h_set(q);
            bool via_subset = subset_of(h, d);
            bool via_closure = subset_of(product_set(d, d), d);
            bool agree = engine == via_subset && engine == via_closure;
            if (agree && enumerable) {
                auto d_enum = value_classes_by_enumeration(q);
                agree = d == d_enum && engine == subset_of(product_set(d_enum, d_enum), d_enum);
            }
            if (!agree)
                ctx.fail(f, q.render(), "",
                         "group-form routes disagree (H<=D / D-closure / enumeration)");
        });
    }
}

void check_group_eq(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        ctx.sweep(f, 1, ctx.cfg.max_dim, [&](const QuadraticForm& q) {
            ctx.tick();
            auto d = ctx.d_set(q);
            auto h = ctx.h_set(q);
            if (subset_of(h, d) != (h == d))
                ctx.fail(f, q.render(), "", "H(q) <= D(q) but H(q) != D(q)");
        });
    }
}

void check_round_chain(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        FieldElement one = FieldElement::one(f);
        auto reps = square_class_reps(f);
        ctx.sweep(f, 1, ctx.cfg.max_dim, [&](const QuadraticForm& q) {
            if (!ctx.rep(q, one)) return;
            ctx.tick();
            bool engine = is_round(q);
            bool via_hg = true;
            for (const auto& c : reps)
                if (ctx.h(q, c.representative()) && !ctx.g(q, c.representative())) via_hg = false;
            bool via_unary = true;
            for (const auto& c : reps) {
                auto multiple = tensor(q, pfister(f, {c.representative()}));
                std::size_t i = witt_index(multiple);
                if (i != 0 && 2 * i != multiple.dim()) via_unary = false;
            }
            bool via_binary = round_via_binary_multiples(q);
            if (engine != via_hg || engine != via_unary || engine != via_binary)
                ctx.fail(f, q.render(), "",
                         "roundness routes disagree (sets / H<=G / 1-fold multiples / binary "
                         "multiples)");
        });
    }
}

void check_simone(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        FieldElement one = FieldElement::one(f);
        for (std::size_t dim = 1; dim <= ctx.cfg.max_dim; dim *= 2) {
            ctx.sweep(f, dim, dim, [&](const QuadraticForm& q) {
                ctx.tick();
                bool lhs = is_pfister_form(q);
                bool rhs = is_similar_to_pfister(q) && ctx.rep(q, one);
                if (lhs != rhs)
                    ctx.fail(f, q.render(), "",
                             lhs ? "Pfister but not (similar-to-Pfister and represents 1)"
                                 : "similar to a Pfister form, represents 1, yet not Pfister");
            });
        }
    }
}

void check_rounddim(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        auto one = one_class(f);
        ctx.sweep(f, 1, ctx.cfg.max_dim, [&](const QuadraticForm& q) {
            ctx.tick();
            auto d = ctx.d_set(q);
            bool round = is_round(q);
            if (d.size() == 1 && d.count(one) && !round)
                ctx.fail(f, q.render(), "", "D(q) is exactly the squares but q is not round");
            if (round && q.dim() % 2 != 0) {
                auto h = ctx.h_set(q);
                if (!(h.size() == 1 && h.count(one)))
                    ctx.fail(f, q.render(), "",
                             "odd-dimensional round form with H(q) larger than the squares");
            }
        });
    }
}

void check_oddround(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        bool pythagorean = field_traits(f).is_pythagorean;
        FieldElement one = FieldElement::one(f);

        for (std::size_t dim = 1; dim <= ctx.cfg.max_dim; dim += 2) {
            ctx.sweep(f, dim, dim, [&](const QuadraticForm& q) {
                ctx.tick();
                if (!is_round(q)) return;
                QuadraticForm all_ones = diag(f, std::vector<FieldElement>(q.dim(), one));
                if (!is_isometric(q, all_ones))
                    ctx.fail(f, q.render(), "",
                             "odd-dimensional round form not isometric to (2r+1)x<1>");
            });
        }
        // (2r+1) x <1> for r = 0, 1, 2: round in dim >= 3 exactly over
        // Pythagorean fields; <1> itself is always round.
        for (std::size_t r = 0; r <= 2; ++r) {
            ctx.tick();
            QuadraticForm all_ones = diag(f, std::vector<FieldElement>(2 * r + 1, one));
            bool round = is_round(all_ones);
            bool expected = r == 0 ? true : pythagorean;
            if (round != expected)
                ctx.fail(f, all_ones.render(), "",
                         std::string("expected round = ") + (expected ? "true" : "false") +
                             " by the Pythagorean criterion");
        }
    }
}

void check_oddisoround(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        bool quad_closed = field_traits(f).is_quadratically_closed;
        for (std::size_t dim = 1; dim <= ctx.cfg.max_dim; dim += 2) {
            ctx.sweep(f, dim, dim, [&](const QuadraticForm& q) {
                if (!is_isotropic(q)) return;
                ctx.tick();
                if (is_round(q) != quad_closed)
                    ctx.fail(f, q.render(), "",
                             quad_closed
                                 ? "odd isotropic form not round over a quadratically closed field"
                                 : "odd isotropic round form over a non-quadratically-closed field");
            });
        }
    }
}

void check_oddroundcor(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        auto traits = field_traits(f);
        if (!traits.is_real || !traits.is_pythagorean) continue;
        auto reps = square_class_reps(f);
        for (std::size_t dim = 1; dim <= ctx.cfg.max_dim; dim += 2) {
            ctx.sweep(f, dim, dim, [&](const QuadraticForm& q) {
                if (is_isotropic(q) || !is_round(q)) return;
                for (const auto& b : reps) {
                    for (const auto& c : reps) {
                        auto beta = diag(f, {b.representative(), c.representative()});
                        if (is_isotropic(beta)) continue;
                        ctx.tick();
                        if (is_isotropic(tensor(q, beta)))
                            ctx.fail(f, q.render(), beta.render(),
                                     "q (x) beta isotropic for anisotropic binary beta");
                    }
                }
            });
        }
    }
}

void check_laurent_going_up(const Ctx& ctx, std::size_t depth) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f) || !ctx.can_extend(f, depth)) continue;
        FieldDescriptor k = f;
        for (std::size_t i = 0; i < depth; ++i) k = k.with_variable(fresh_variable(k));
        ctx.sweep(f, 1, ctx.cfg.max_dim, [&](const QuadraticForm& q) {
            ctx.tick();
            QuadraticForm qk = lift(q, k);
            if (is_group(q) != is_group(qk))
                ctx.fail(k, q.render(), "", "group property is not preserved");
            if (!is_isotropic(q) && is_round(q) != is_round(qk))
                ctx.fail(k, q.render(), "", "roundness of an anisotropic form is not preserved");
        });
    }
}

void check_agen(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f) || !ctx.can_extend(f, 1)) continue;
        FieldDescriptor k = f.with_variable(fresh_variable(f));
        auto reps = square_class_reps(f);
        ctx.sweep(f, 1, ctx.cfg.max_dim, [&](const QuadraticForm& q) {
            QuadraticForm qk = lift(q, k);
            for (const auto& a : reps) {
                ctx.tick();
                bool over_f = ctx.rep(q, a.representative());
                bool over_k = ctx.rep(qk, lift(a.representative(), k));
                if (over_f != over_k)
                    ctx.fail(k, q.render(), a.render(),
                             over_k ? "represented upstairs but not over the base"
                                    : "represented over the base but not upstairs");
            }
        });
    }
}

void check_grouptrans(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f) || !ctx.can_extend(f, 1)) continue;
        FieldDescriptor k = f.with_variable(fresh_variable(f));
        FieldElement xv = FieldElement::variable(k, k.outer_variable());
        ctx.sweep(f, 1, ctx.cfg.max_dim, [&](const QuadraticForm& q) {
            ctx.tick();
            QuadraticForm multiple = tensor(lift(q, k), pfister(k, {xv}));
            if (is_group(q) != is_group(multiple))
                ctx.fail(k, q.render(), "",
                         "q and its generic Pfister multiple disagree on the group property");
        });
    }
}

void check_genericgnr_finite(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f) || !ctx.can_extend(f, 1)) continue;
        FieldDescriptor k = f.with_variable(fresh_variable(f));
        FieldElement xv = FieldElement::variable(k, k.outer_variable());
        ctx.sweep(f, 1, ctx.cfg.max_dim, [&](const QuadraticForm& q) {
            if (is_isotropic(q) || !is_group(q) || is_round(q)) return;
            ctx.tick();
            QuadraticForm multiple = tensor(lift(q, k), pfister(k, {xv}));
            if (is_isotropic(multiple) || !is_group(multiple) || is_round(multiple))
                ctx.fail(k, q.render(), "",
                         "generic Pfister multiple is not anisotropic group-not-round");
        });
    }
}

void check_genericgnr_q(const Ctx& ctx) {
    FieldDescriptor q_field = FieldDescriptor::rationals();
    FieldElement one = FieldElement::one(q_field);
    QuadraticForm q = diag(q_field, std::vector<FieldElement>(7, one));
    FieldElement two = FieldElement::from_integer(q_field, 2);

    auto expect = [&](bool got, bool want, const std::string& what) {
        ctx.tick();
        if (got != want)
            ctx.fail(q_field, q.render(), "2", what + ": expected " + (want ? "true" : "false"));
    };
    expect(ctx.rep(q, two), true, "represents(7x<1>, 2)");
    expect(ctx.h(q, two), true, "2 in H(7x<1>)");
    expect(ctx.g(q, two), false, "2 in G(7x<1>)");

    FieldDescriptor k = q_field.with_variable("x");
    FieldElement xv = FieldElement::variable(k, "x");
    QuadraticForm multiple = tensor(lift(q, k), pfister(k, {xv}));
    FieldElement two_k = lift(two, k);

    auto expect_k = [&](bool got, bool want, const std::string& what) {
        ctx.tick();
        if (got != want)
            ctx.fail(k, multiple.render(), "2", what + ": expected " + (want ? "true" : "false"));
    };
    expect_k(is_isotropic(multiple), false, "q (x) <1,x> isotropic over Q((x))");
    expect_k(ctx.rep(multiple, two_k), true, "represents(q (x) <1,x>, 2)");
    expect_k(ctx.h(multiple, two_k), true, "2 in H(q (x) <1,x>)");
    expect_k(ctx.g(multiple, two_k), false, "2 in G(q (x) <1,x>)");
}

void check_anisround_f3(const Ctx& ctx) {
    FieldDescriptor f3 = FieldDescriptor::finite_field(3);
    auto e = [&](std::int64_t v) { return FieldElement::from_integer(f3, v); };
    QuadraticForm q = diag(f3, {e(1), e(-1), e(1), e(1)});

    ctx.tick();
    if (!is_round(q)) ctx.fail(f3, q.render(), "", "expected round over F3");

    FieldDescriptor k = f3.with_variable("x");
    QuadraticForm qk = lift(q, k);
    FieldElement xv = FieldElement::variable(k, "x");

    ctx.tick();
    if (is_round(qk)) ctx.fail(k, qk.render(), "", "expected not round over F3((x))");

    ctx.tick();
    if (!ctx.h(qk, xv) || ctx.g(qk, xv))
        ctx.fail(k, qk.render(), "x", "expected x in H(q) \\ G(q)");

    ctx.tick();
    auto decomposition = witt_decomposition(qk);
    if (!decomposition.anisotropic_part || ctx.rep(*decomposition.anisotropic_part, xv))
        ctx.fail(k, qk.render(), "x", "expected x not represented by the anisotropic kernel");
}

void check_pfister_round(const Ctx& ctx) {
    for (const auto& f : ctx.cfg.fields) {
        if (!finite_classes(f)) continue;
        auto reps = square_class_reps(f);
        auto run = [&](const std::vector<FieldElement>& slots) {
            ctx.tick();
            QuadraticForm pi = pfister(f, slots);
            if (!is_round(pi)) {
                ctx.fail(f, pi.render(), "", "Pfister form is not round");
                return;
            }
            if (is_isotropic(pi) && !is_hyperbolic(pi))
                ctx.fail(f, pi.render(), "", "isotropic Pfister form is not hyperbolic");
        };
        run({});
        for (const auto& a : reps) run({a.representative()});
        for (const auto& a : reps)
            for (const auto& b : reps) run({a.representative(), b.representative()});
    }
}

// ---- catalogue ----------------------------------------------------------

struct CheckDef {
    std::string name;
    std::string statement;
    std::function<void(const Ctx&)> run;
};

const std::vector<CheckDef>& catalogue() {
    static const std::vector<CheckDef> defs = {
        {"springer_additivity", "i(p perp x*q) = i(p) + i(q) over F((x))",
         check_springer_additivity},
        {"roussey_H_eq_DD",
         "H(q) = D(q)D(q): <1,-a> (x) q is isotropic exactly for products of two represented "
         "classes (vs vector enumeration)",
         check_roussey},
        {"group_iff_H_subset_D",
         "q is a group form iff H(q) <= D(q), iff D(q) is multiplicatively closed",
         check_group_iff},
        {"group_H_equals_D", "H(q) <= D(q) iff H(q) = D(q)", check_group_eq},
        {"round_char_chain",
         "for q representing 1: round iff H(q) <= G(q) iff q (x) <1,a> is anisotropic or "
         "hyperbolic for all a iff the same for all binary multiples",
         check_round_chain},
        {"simone", "q is a Pfister form iff q is similar to a Pfister form and represents 1",
         check_simone},
        {"rounddim",
         "D(q) = squares implies q round; a round q with H(q) != squares is even-dimensional",
         check_rounddim},
        {"oddround",
         "odd-dimensional round forms are isometric to (2r+1)x<1>, and those of dim >= 3 are "
         "round exactly over Pythagorean fields",
         check_oddround},
        {"oddisoround",
         "an odd-dimensional isotropic form is round iff the field is quadratically closed",
         check_oddisoround},
        {"oddroundcor",
         "for odd-dimensional anisotropic round q, q (x) beta is anisotropic for every "
         "anisotropic binary beta",
         check_oddroundcor},
        {"laurent_going_up",
         "q is group over F iff group over F((x)); same for roundness of anisotropic forms",
         [](const Ctx& c) { check_laurent_going_up(c, 1); }},
        {"laurent_tower",
         "q is group over F iff group over F((x))((y)); same for roundness of anisotropic forms",
         [](const Ctx& c) { check_laurent_going_up(c, 2); }},
        {"agen_laurent_instance",
         "the F-classes represented by q over F((x)) are exactly D_F(q)", check_agen},
        {"grouptrans", "q is group over F iff q (x) <1,x> is group over F((x))",
         check_grouptrans},
        {"genericgnr_finite",
         "an anisotropic group-not-round q yields the anisotropic group-not-round q (x) <1,x> "
         "over F((x))",
         check_genericgnr_finite},
        {"genericgnr_Q_membership",
         "membership witnesses over Q: 7x<1> represents 2 with 2 in H \\ G, and 7x<1> (x) <1,x> "
         "stays anisotropic with the same witnesses over Q((x))",
         check_genericgnr_q},
        {"anisround_F3",
         "<1,-1,1,1> is round over F3 but not over F3((x)): x lies in H \\ G and is not "
         "represented by the anisotropic kernel",
         check_anisround_f3},
        {"pfister_round", "Pfister forms are round; isotropic Pfister forms are hyperbolic",
         check_pfister_round},
    };
    return defs;
}

}  // namespace

SweepConfig paper_suite_defaults() {
    SweepConfig cfg;
    cfg.fields = {FieldDescriptor::finite_field(3),
                  FieldDescriptor::finite_field(5),
                  FieldDescriptor::finite_field(3).with_variable("x"),
                  FieldDescriptor::reals(),
                  FieldDescriptor::reals().with_variable("x"),
                  FieldDescriptor::complexes()};
    return cfg;
}

bool VerificationReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.outcome == CheckOutcome::fail; });
}

const std::vector<std::pair<std::string, std::string>>& check_catalogue() {
    static const std::vector<std::pair<std::string, std::string>> names = [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& def : catalogue()) out.emplace_back(def.name, def.statement);
        return out;
    }();
    return names;
}

std::uint64_t form_population(const FieldDescriptor& field, std::size_t lo, std::size_t hi) {
    auto traits = field_traits(field);
    if (!traits.square_class_count)
        throw UnsupportedError("cannot enumerate forms over " + field.render() +
                               ": infinite square-class group");
    std::uint64_t classes = *traits.square_class_count;
    std::uint64_t total = 0;
    for (std::size_t d = lo; d <= hi; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (count > UINT64_MAX / classes) throw BoundError("form population overflow");
            count *= classes;
        }
        total += count;
    }
    return total;
}

FormEnumerator::FormEnumerator(FieldDescriptor field, std::size_t lo, std::size_t hi,
                               std::uint64_t budget)
    : field_(std::move(field)), reps_(square_class_reps(field_)), dim_(lo), hi_(hi) {
    if (lo < 1 || lo > hi) throw DomainError("invalid dimension range");
    if (form_population(field_, lo, hi) > budget)
        throw BoundError("enumeration budget exceeded over " + field_.render());
    idx_.assign(dim_, 0);
}

QuadraticForm FormEnumerator::next() {
    if (done_) throw DomainError("enumeration exhausted");
    std::vector<FieldElement> entries;
    entries.reserve(dim_);
    for (std::size_t i : idx_) entries.push_back(reps_[i].representative());
    QuadraticForm q = diag(field_, entries);
    advance();
    return q;
}

void FormEnumerator::advance() {
    std::size_t k = 0;
    while (k < idx_.size() && ++idx_[k] == reps_.size()) idx_[k++] = 0;
    if (k == idx_.size()) {
        if (++dim_ > hi_) {
            done_ = true;
            return;
        }
        idx_.assign(dim_, 0);
    }
}

void for_each_form(const FieldDescriptor& field, std::size_t lo, std::size_t hi,
                   std::uint64_t budget, const std::function<void(const QuadraticForm&)>& fn) {
    if (hi < lo) return;
    FormEnumerator it(field, lo, hi, budget);
    while (it.has_next()) fn(it.next());
}

VerificationReport run_suite(const SweepConfig& cfg) { return run_suite(cfg, EngineHooks{}); }

VerificationReport run_suite(const SweepConfig& cfg, const EngineHooks& hooks) {
    if (cfg.max_dim < 1) throw DomainError("max_dim must be at least 1");
    for (const auto& f : cfg.fields) {
        if (!finite_classes(f)) continue;
        if (form_population(f, 1, cfg.max_dim) > cfg.bounds.form_budget)
            throw BoundError("sweep budget exceeded for " + f.render());
    }

    std::vector<const CheckDef*> selected;
    if (cfg.checks.empty()) {
        for (const auto& def : catalogue()) selected.push_back(&def);
    } else {
        for (const auto& name : cfg.checks) {
            const CheckDef* found = nullptr;
            for (const auto& def : catalogue())
                if (def.name == name) found = &def;
            if (!found) throw DomainError("unknown check '" + name + "'");
            selected.push_back(found);
        }
    }

    VerificationReport report;
    report.config = cfg;
    for (const CheckDef* def : selected) {
        CheckResult result;
        result.name = def->name;
        result.statement = def->statement;
        Ctx ctx{cfg, hooks, &result};
        auto start = std::chrono::steady_clock::now();
        try {
            def->run(ctx);
        } catch (const std::exception& e) {
            result.counterexamples.push_back(
                {"", "", "", std::string("engine error: ") + e.what()});
        }
        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!result.counterexamples.empty())
            result.outcome = CheckOutcome::fail;
        else if (result.population == 0)
            result.outcome = CheckOutcome::vacuous;
        else
            result.outcome = CheckOutcome::pass;
        report.checks.push_back(std::move(result));
    }
    return report;
}

}  // namespace qf

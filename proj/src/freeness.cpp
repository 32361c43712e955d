#include "mild/freeness.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mild/errors.hpp"

namespace mild {

namespace {

void append_run(std::vector<int>& out, int letter, long count) {
    out.insert(out.end(), static_cast<std::size_t>(count), letter);
}

int first_letter(const ParamMonomial& pm) {
    return pm.prefix.is_unit() ? pm.repeated : pm.prefix.idx.front();
}

int last_letter(const ParamMonomial& pm) {
    return pm.suffix.is_unit() ? pm.repeated : pm.suffix.idx.back();
}

// The first letter occurs nowhere else in any instance.
bool left_anchored(const ParamMonomial& pm) {
    if (pm.prefix.is_unit()) return false;
    const int f = pm.prefix.idx.front();
    if (f == pm.repeated) return false;
    if (std::count(pm.prefix.idx.begin() + 1, pm.prefix.idx.end(), f) > 0) return false;
    return std::count(pm.suffix.idx.begin(), pm.suffix.idx.end(), f) == 0;
}

bool right_anchored(const ParamMonomial& pm) {
    if (pm.suffix.is_unit()) return false;
    const int l = pm.suffix.idx.back();
    if (l == pm.repeated) return false;
    if (std::count(pm.suffix.idx.begin(), pm.suffix.idx.end() - 1, l) > 0) return false;
    return std::count(pm.prefix.idx.begin(), pm.prefix.idx.end(), l) == 0;
}

// Superset of the letters reachable by a nontrivial proper suffix of an
// instance (everything except the first position).
std::set<int> interior_letters(const ParamMonomial& pm) {
    std::set<int> out(pm.suffix.idx.begin(), pm.suffix.idx.end());
    out.insert(pm.repeated);
    if (!pm.prefix.is_unit()) out.insert(pm.prefix.idx.begin() + 1, pm.prefix.idx.end());
    return out;
}

// Superset of the letters reachable by a nontrivial proper prefix
// (everything except the last position).
std::set<int> pre_last_letters(const ParamMonomial& pm) {
    std::set<int> out(pm.prefix.idx.begin(), pm.prefix.idx.end());
    out.insert(pm.repeated);
    if (!pm.suffix.is_unit()) out.insert(pm.suffix.idx.begin(), pm.suffix.idx.end() - 1);
    return out;
}

std::set<int> template_letters(const ParamMonomial& pm) {
    std::set<int> out(pm.prefix.idx.begin(), pm.prefix.idx.end());
    out.insert(pm.repeated);
    out.insert(pm.suffix.idx.begin(), pm.suffix.idx.end());
    return out;
}

FreenessWitness make_witness(ViolationKind kind, Monomial a, Monomial b, std::string detail) {
    return FreenessWitness{kind, std::move(a), std::move(b), std::move(detail)};
}

// Checks one ordered pair of concrete monomials, both known distinct family
// members (they may still be equal as words). Returns the first violation.
std::optional<FreenessWitness> check_ordered_pair(const Monomial& a, const Monomial& b,
                                                  OverlapPolicy policy) {
    if (a == b) {
        return make_witness(ViolationKind::Duplicate, a, b, "duplicate member " + a.str());
    }
    if (is_submonomial(a, b)) {
        return make_witness(ViolationKind::Submonomial, a, b,
                            a.str() + " is a submonomial of " + b.str());
    }
    if (policy == OverlapPolicy::Standard) {
        if (has_overlap(a, b)) {
            return make_witness(ViolationKind::Overlap, a, b,
                                "overlap between " + a.str() + " and " + b.str());
        }
    } else {
        if (a.degree() >= 2 && b.degree() >= 2 && a.idx.front() == b.idx.front()) {
            return make_witness(ViolationKind::Overlap, a, b,
                                "shared prefix X" + std::to_string(a.idx.front()) + " between " +
                                    a.str() + " and " + b.str());
        }
    }
    return std::nullopt;
}

void validate_family(const MonomialFamily& family) {
    if (family.d < 1) throw std::invalid_argument("family: ambient generator count must be >= 1");
    for (const auto& m : family.fixed) {
        if (m.d != family.d) throw std::invalid_argument("family: member over a different ambient d");
        if (m.degree() < 1) throw std::invalid_argument("family: members must have degree >= 1");
    }
    for (const auto& pm : family.parametric) {
        if (pm.d() != family.d) throw std::invalid_argument("family: member over a different ambient d");
    }
}

} // namespace

ParamMonomial::ParamMonomial(Monomial prefix_in, int repeated_in, Monomial suffix_in,
                             long min_n_in, std::optional<long> max_n_in)
    : prefix(std::move(prefix_in)), repeated(repeated_in), suffix(std::move(suffix_in)),
      min_n(min_n_in), max_n(max_n_in) {
    if (prefix.d != suffix.d) throw std::invalid_argument("parametric member: mismatched ambient d");
    if (repeated < 1 || repeated > prefix.d) {
        throw std::invalid_argument("parametric member: repeated letter out of range");
    }
    if (min_n < 1) throw std::invalid_argument("parametric member: range must start at n >= 1");
    if (max_n && *max_n < min_n) throw std::invalid_argument("parametric member: empty range");
    // Fold repeated letters adjacent to the run into the run itself.
    while (!prefix.idx.empty() && prefix.idx.back() == repeated) {
        prefix.idx.pop_back();
        ++min_n;
        if (max_n) ++*max_n;
    }
    while (!suffix.idx.empty() && suffix.idx.front() == repeated) {
        suffix.idx.erase(suffix.idx.begin());
        ++min_n;
        if (max_n) ++*max_n;
    }
}

Monomial ParamMonomial::instantiate(long n) const {
    if (n < min_n || (max_n && n > *max_n)) {
        throw std::invalid_argument("parametric member: n out of range");
    }
    std::vector<int> idx = prefix.idx;
    append_run(idx, repeated, n);
    idx.insert(idx.end(), suffix.idx.begin(), suffix.idx.end());
    return Monomial::word(prefix.d, std::move(idx));
}

long ParamMonomial::instance_count_at_least(long k) const {
    if (!max_n) return k;
    return std::min(k, *max_n - min_n + 1);
}

std::string ParamMonomial::str() const {
    std::string out;
    if (!prefix.is_unit()) out += prefix.str() + ".";
    out += "X" + std::to_string(repeated) + "^n";
    if (!suffix.is_unit()) out += "." + suffix.str();
    return out;
}

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::Submonomial: return "submonomial";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::Duplicate: return "duplicate";
    }
    return "?";
}

bool is_submonomial(const Monomial& a, const Monomial& b) {
    if (a.d != b.d) throw std::invalid_argument("is_submonomial: mismatched ambient d");
    if (a.idx.size() > b.idx.size()) return false;
    if (a.idx.empty()) return true;
    auto it = std::search(b.idx.begin(), b.idx.end(), a.idx.begin(), a.idx.end());
    return it != b.idx.end();
}

bool has_overlap(const Monomial& a, const Monomial& b) {
    if (a.d != b.d) throw std::invalid_argument("has_overlap: mismatched ambient d");
    const std::size_t la = a.idx.size(), lb = b.idx.size();
    if (la < 2 || lb < 2) return false;
    const std::size_t kmax = std::min(la, lb) - 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (std::equal(a.idx.begin(), a.idx.begin() + k, b.idx.end() - k)) return true;
    }
    return false;
}

FreenessVerdict is_combinatorially_free(const MonomialFamily& family, OverlapPolicy policy,
                                        bool self_overlap) {
    validate_family(family);

    // Single-instance parametric members are just fixed monomials.
    std::vector<Monomial> fixed = family.fixed;
    std::vector<ParamMonomial> params;
    for (const auto& pm : family.parametric) {
        if (pm.instance_count_at_least(2) < 2) {
            fixed.push_back(pm.instantiate(pm.min_n));
        } else {
            params.push_back(pm);
        }
    }

    // Fixed vs fixed.
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        for (std::size_t j = 0; j < fixed.size(); ++j) {
            if (i == j) {
                if (policy == OverlapPolicy::Standard && self_overlap &&
                    has_overlap(fixed[i], fixed[i])) {
                    return {false, make_witness(ViolationKind::Overlap, fixed[i], fixed[i],
                                                "self-overlap of " + fixed[i].str())};
                }
                continue;
            }
            if (j < i && fixed[i] == fixed[j]) continue; // duplicate reported at (j, i)
            if (auto w = check_ordered_pair(fixed[i], fixed[j], policy)) return {false, *w};
        }
    }

    // Fixed vs parametric: a violation against prefix r^n suffix only ever
    // inspects a window of at most deg(fixed) letters of the run, so every
    // violation visible for some n is already visible for some
    // n <= min_n + deg(fixed) + 1. Enumerating that far is exhaustive.
    for (const auto& f : fixed) {
        for (const auto& pm : params) {
            const long upto = pm.min_n + f.degree() + 1;
            for (long n = pm.min_n; n <= upto && (!pm.max_n || n <= *pm.max_n); ++n) {
                const Monomial inst = pm.instantiate(n);
                if (auto w = check_ordered_pair(f, inst, policy)) return {false, *w};
                if (auto w = check_ordered_pair(inst, f, policy)) return {false, *w};
            }
        }
    }

    // Parametric members with at least two instances.
    for (const auto& pm : params) {
        const bool al = left_anchored(pm), ar = right_anchored(pm);
        if (policy == OverlapPolicy::Literal) {
            if (pm.prefix.is_unit() && pm.suffix.is_unit()) {
                return {false, make_witness(ViolationKind::Submonomial, pm.instantiate(pm.min_n),
                                            pm.instantiate(pm.min_n + 1),
                                            pm.instantiate(pm.min_n).str() + " is a submonomial of " +
                                                pm.instantiate(pm.min_n + 1).str())};
            }
            return {false, make_witness(ViolationKind::Overlap, pm.instantiate(pm.min_n),
                                        pm.instantiate(pm.min_n + 1),
                                        "shared prefix X" + std::to_string(first_letter(pm)) +
                                            " between instances of " + pm.str())};
        }
        if (!al && !ar) {
            throw std::invalid_argument(
                "unsupported parametric shape " + pm.str() +
                ": neither the first nor the last letter is unique in the template");
        }
        // Either anchor rules out every prefix/suffix coincidence between
        // instances (the anchor letter sits at an end and occurs nowhere
        // else). A shorter instance embeds into a longer one only along the
        // anchor, which forces the letter after (before) the run to equal
        // the repeated letter; normalization made that impossible unless the
        // far side is empty.
        const bool sub_blocked =
            (al && !pm.suffix.is_unit()) || (ar && !pm.prefix.is_unit());
        if (!sub_blocked) {
            return {false, make_witness(ViolationKind::Submonomial, pm.instantiate(pm.min_n),
                                        pm.instantiate(pm.min_n + 1),
                                        pm.instantiate(pm.min_n).str() + " is a submonomial of " +
                                            pm.instantiate(pm.min_n + 1).str())};
        }
    }

    // Distinct parametric members against each other.
    for (std::size_t i = 0; i < params.size(); ++i) {
        for (std::size_t j = i + 1; j < params.size(); ++j) {
            const auto& P = params[i];
            const auto& Q = params[j];
            if (policy == OverlapPolicy::Literal) {
                if (first_letter(P) == first_letter(Q)) {
                    return {false,
                            make_witness(ViolationKind::Overlap, P.instantiate(P.min_n + 1),
                                         Q.instantiate(Q.min_n + 1),
                                         "shared prefix X" + std::to_string(first_letter(P)) +
                                             " between " + P.str() + " and " + Q.str())};
                }
            }
            auto overlap_blocked = [&](const ParamMonomial& A, const ParamMonomial& B) {
                // prefix of an A-instance vs suffix of a B-instance
                return (left_anchored(A) && !interior_letters(B).count(first_letter(A))) ||
                       (right_anchored(B) && !pre_last_letters(A).count(last_letter(B)));
            };
            auto sub_blocked = [&](const ParamMonomial& A, const ParamMonomial& B) {
                // some letter of A never appears in B
                const auto lb = template_letters(B);
                for (int x : template_letters(A)) {
                    if (!lb.count(x)) return true;
                }
                return false;
            };
            bool ok = sub_blocked(P, Q) && sub_blocked(Q, P);
            if (policy == OverlapPolicy::Standard) {
                ok = ok && overlap_blocked(P, Q) && overlap_blocked(Q, P);
            }
            if (ok) continue;
            // Not symbolically certified: look for a concrete violation among
            // small instances before giving up.
            const long K = P.prefix.degree() + P.suffix.degree() + Q.prefix.degree() +
                           Q.suffix.degree() + 2;
            for (long n = P.min_n; n <= P.min_n + K && (!P.max_n || n <= *P.max_n); ++n) {
                for (long m = Q.min_n; m <= Q.min_n + K && (!Q.max_n || m <= *Q.max_n); ++m) {
                    const Monomial a = P.instantiate(n);
                    const Monomial b = Q.instantiate(m);
                    if (auto w = check_ordered_pair(a, b, policy)) return {false, *w};
                    if (auto w = check_ordered_pair(b, a, policy)) return {false, *w};
                }
            }
            throw std::invalid_argument("unsupported parametric pair " + P.str() + " vs " +
                                        Q.str() + ": no symbolic certificate applies");
        }
    }

    return {true, std::nullopt};
}

CutPair choose_cut_pair(const std::vector<std::pair<int, int>>& pairs, int c, int d) {
    if (c < 2) throw std::invalid_argument("choose_cut_pair: c must be >= 2");
    if (d <= c) throw std::invalid_argument("choose_cut_pair: need c < d");
    std::set<std::pair<int, int>> seen;
    for (const auto& [t, s] : pairs) {
        if (!(1 <= s && s <= c && c < t && t <= d)) {
            throw std::invalid_argument("choose_cut_pair: pair (" + std::to_string(t) + "," +
                                        std::to_string(s) + ") violates s <= c < t");
        }
        if (!seen.insert({t, s}).second) {
            throw std::invalid_argument("choose_cut_pair: pairs must be pairwise distinct");
        }
    }
    for (int j0 = c + 1; j0 <= d; ++j0) {
        for (int i0 = 2; i0 <= c; ++i0) {
            if (!seen.count({j0, i0})) return CutPair{i0, j0};
        }
    }
    std::ostringstream msg;
    msg << "no admissible cut pair: r = " << pairs.size() << " >= (d-c)(c-1) = "
        << (d - c) * (c - 1);
    throw std::domain_error(msg.str());
}

FreenessVerdict certify_family_with_cut(const std::vector<Monomial>& relation_hats, CutPair cut,
                                        int d) {
    if (cut.i0 < 2 || cut.j0 < 2 || cut.i0 == cut.j0 || cut.i0 > d || cut.j0 > d) {
        throw std::invalid_argument("certify_family_with_cut: invalid cut pair");
    }
    for (const auto& h : relation_hats) {
        if (h.degree() != 2) {
            throw std::invalid_argument("certify_family_with_cut: relation hats must have degree 2");
        }
    }
    MonomialFamily family;
    family.d = d;
    family.fixed = relation_hats;
    family.parametric.emplace_back(Monomial::gen(d, cut.j0), cut.i0, Monomial::gen(d, 1));
    return is_combinatorially_free(family, OverlapPolicy::Standard, true);
}

namespace {

struct ForbiddenFactorAutomaton {
    std::vector<std::vector<int>> next; // [state][letter-1]
    std::vector<char> dead;

    ForbiddenFactorAutomaton(const std::vector<Monomial>& patterns, int d) {
        std::vector<std::map<int, int>> child(1);
        std::vector<int> fail(1, 0);
        dead.assign(1, false);
        for (const auto& pat : patterns) {
            int cur = 0;
            for (int letter : pat.idx) {
                auto it = child[cur].find(letter);
                if (it == child[cur].end()) {
                    child[cur][letter] = static_cast<int>(child.size());
                    cur = static_cast<int>(child.size());
                    child.emplace_back();
                    fail.push_back(0);
                    dead.push_back(false);
                } else {
                    cur = it->second;
                }
            }
            dead[cur] = true;
        }
        std::deque<int> queue;
        for (auto& [letter, v] : child[0]) {
            fail[v] = 0;
            queue.push_back(v);
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            dead[u] = dead[u] || dead[fail[u]];
            for (auto& [letter, v] : child[u]) {
                int f = fail[u];
                while (f != 0 && !child[f].count(letter)) f = fail[f];
                auto it = child[f].find(letter);
                fail[v] = (it != child[f].end() && it->second != v) ? it->second : 0;
                queue.push_back(v);
            }
        }
        next.assign(child.size(), std::vector<int>(static_cast<std::size_t>(d), 0));
        // goto closure in BFS order (fail target already resolved)
        std::deque<int> order{0};
        std::vector<char> visited(child.size(), false);
        visited[0] = true;
        while (!order.empty()) {
            int u = order.front();
            order.pop_front();
            for (int letter = 1; letter <= d; ++letter) {
                auto it = child[u].find(letter);
                if (it != child[u].end()) {
                    next[u][letter - 1] = it->second;
                    if (!visited[it->second]) {
                        visited[it->second] = true;
                        order.push_back(it->second);
                    }
                } else {
                    next[u][letter - 1] = (u == 0) ? 0 : next[fail[u]][letter - 1];
                }
            }
        }
    }
};

} // namespace

ParamMonomial parse_param_monomial(std::string_view text, int d) {
    std::vector<std::string_view> segments;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '.') {
            segments.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    std::vector<int> prefix, suffix;
    int repeated = -1;
    for (const auto seg : segments) {
        if (seg.size() > 2 && seg.substr(seg.size() - 2) == "^n") {
            if (repeated != -1) throw ParseError("parametric member: more than one ^n segment");
            const Monomial m = Monomial::parse(seg.substr(0, seg.size() - 2), d);
            if (m.degree() != 1) throw ParseError("parametric member: ^n applies to one letter");
            repeated = m.idx[0];
        } else {
            const Monomial m = Monomial::parse(seg, d);
            auto& side = (repeated == -1) ? prefix : suffix;
            side.insert(side.end(), m.idx.begin(), m.idx.end());
        }
    }
    if (repeated == -1) throw ParseError("parametric member: missing ^n segment");
    return ParamMonomial(Monomial::word(d, std::move(prefix)), repeated,
                         Monomial::word(d, std::move(suffix)));
}

MonomialFamily parse_family(std::string_view text, int d) {
    MonomialFamily family;
    family.d = d;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != '\n') continue;
        std::string_view line = text.substr(start, i - start);
        start = i + 1;
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t' || line.front() == '\r')) line.remove_prefix(1);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        if (line.find("^n") != std::string_view::npos) {
            family.parametric.push_back(parse_param_monomial(line, d));
        } else {
            family.fixed.push_back(Monomial::parse(line, d));
        }
    }
    return family;
}

std::string family_str(const MonomialFamily& family) {
    std::string out;
    for (const auto& m : family.fixed) out += m.str() + "\n";
    for (const auto& pm : family.parametric) out += pm.str() + "\n";
    return out;
}

std::vector<mpz_class> count_normal_words(const MonomialFamily& family, int d, int upto) {
    if (d < 1) throw std::invalid_argument("count_normal_words: d must be >= 1");
    if (upto < 0) throw std::invalid_argument("count_normal_words: upto must be >= 0");
    validate_family(family);
    std::vector<Monomial> patterns = family.fixed;
    for (const auto& pm : family.parametric) {
        const int base = pm.prefix.degree() + pm.suffix.degree();
        for (long n = pm.min_n; base + n <= upto && (!pm.max_n || n <= *pm.max_n); ++n) {
            patterns.push_back(pm.instantiate(n));
        }
    }
    ForbiddenFactorAutomaton aut(patterns, d);
    std::vector<mpz_class> mass(aut.next.size(), 0);
    if (!aut.dead[0]) mass[0] = 1;
    std::vector<mpz_class> counts;
    counts.reserve(static_cast<std::size_t>(upto) + 1);
    mpz_class total = mass[0];
    counts.push_back(total);
    for (int step = 1; step <= upto; ++step) {
        std::vector<mpz_class> fresh(mass.size(), 0);
        for (std::size_t u = 0; u < mass.size(); ++u) {
            if (mass[u] == 0) continue;
            for (int letter = 0; letter < d; ++letter) {
                const int v = aut.next[u][static_cast<std::size_t>(letter)];
                if (aut.dead[v]) continue;
                fresh[static_cast<std::size_t>(v)] += mass[u];
            }
        }
        mass.swap(fresh);
        total = 0;
        for (const auto& m : mass) total += m;
        counts.push_back(total);
    }
    return counts;
}

} // namespace mild

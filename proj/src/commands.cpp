#include "mild/commands.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mild/arithmetic.hpp"
#include "mild/document.hpp"
#include "mild/errors.hpp"
#include "mild/magnus.hpp"
#include "mild/poincare.hpp"
#include "mild/words.hpp"

namespace mild {

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

template <typename T>
std::string join(const std::vector<T>& items, const char* sep,
                 std::string (*render)(const T&)) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += render(items[i]);
    }
    return out;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out << ", ";
        out << v[i];
    }
    return out.str();
}

std::string policy_name(OverlapPolicy policy) {
    return policy == OverlapPolicy::Standard ? "standard" : "literal";
}

std::string hats_line(const std::vector<Monomial>& hats) {
    if (hats.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < hats.size(); ++i) {
        if (i > 0) out += ", ";
        out += hats[i].str();
    }
    return out;
}

std::string witness_line(const FreenessWitness& w) {
    return "witness (" + violation_kind_name(w.kind) + "): " + w.detail;
}

// The hats of a presentation document at the given truncation, or an
// inconclusive/usage failure.
struct HatResult {
    std::vector<Monomial> hats;
    std::optional<CommandResult> failure;
};

HatResult document_hats(const PresentationDocument& doc, int trunc) {
    HatResult result;
    for (std::size_t k = 0; k < doc.relations.size(); ++k) {
        const auto& rel = doc.relations[k];
        if (rel.kind == PresentationDocument::Relation::Kind::Word) {
            try {
                result.hats.push_back(word_hat(rel.word, doc.p, doc.d, trunc));
            } catch (const TruncationError& e) {
                CommandResult fail;
                fail.code = kExitInconclusive;
                fail.err = "relation " + std::to_string(k + 1) + ": " + e.what() + "\n";
                result.failure = std::move(fail);
                return result;
            }
        } else {
            TruncatedSeries form = doc.parse_form(rel, trunc);
            if (form.is_zero()) {
                CommandResult fail;
                fail.code = kExitInconclusive;
                fail.err = "relation " + std::to_string(k + 1) +
                           ": zero initial form (degree beyond the stored data)\n";
                result.failure = std::move(fail);
                return result;
            }
            result.hats.push_back(highest_term(form));
        }
    }
    return result;
}

} // namespace

CommandResult run_expand(const ExpandOptions& opts) {
    CommandResult res;
    GroupWord word;
    try {
        word = parse_word(opts.word_text);
    } catch (const ParseError& e) {
        res.code = kExitUsage;
        res.err = std::string(e.what()) + "\n";
        return res;
    }
    int d = opts.d;
    if (d == 0) d = std::max(1, word.max_generator());
    TruncatedSeries series(3, 1, 2);
    try {
        series = expand(word, opts.p, d, opts.trunc);
    } catch (const std::invalid_argument& e) {
        res.code = kExitUsage;
        res.err = std::string(e.what()) + "\n";
        return res;
    }
    std::ostringstream out;
    out << series.str() << "\n";
    if (opts.hat) {
        TruncatedSeries shifted = series;
        shifted.add_term(Monomial::unit(d), -1);
        if (shifted.is_zero()) {
            res.code = kExitInconclusive;
            res.err = "no hat: expand(w) - 1 has no terms below truncation " +
                      std::to_string(opts.trunc) + "; raise --trunc\n";
            res.out = out.str();
            return res;
        }
        const Monomial hat = highest_term(shifted);
        out << "hat: " << hat.str() << "\n";
        out << "degree: " << hat.degree() << "\n";
    }
    res.out = out.str();
    return res;
}

CommandResult run_linking(const LinkingOptions& opts) {
    CommandResult res;
    LinkingMatrix matrix;
    try {
        matrix = linking_matrix(opts.p, opts.primes);
    } catch (const std::invalid_argument& e) {
        res.code = kExitUsage;
        res.err = std::string(e.what()) + "\n";
        return res;
    }
    const PresentationSketch sketch = presentation_hats(matrix);
    std::ostringstream out;
    out << "p: " << matrix.p << "\n";
    out << "primes: " << join_u64(matrix.primes) << "\n";
    out << "roots: " << join_u64(matrix.roots) << "\n";
    out << "linking matrix (rows i, columns j; '.' marks the diagonal):\n";
    for (int i = 1; i <= matrix.size(); ++i) {
        out << " ";
        for (int j = 1; j <= matrix.size(); ++j) {
            if (i == j) {
                out << " .";
            } else {
                out << " " << matrix.at(i, j)->value();
            }
        }
        out << "\n";
    }
    out << "initial forms:\n";
    for (int i = 1; i <= matrix.size(); ++i) {
        out << "  rho_" << i << " = " << sketch.forms[static_cast<std::size_t>(i - 1)].str()
            << "\n";
    }
    out << "hats:";
    for (std::size_t i = 0; i < sketch.hats.size(); ++i) {
        out << (i == 0 ? " " : ", ");
        if (sketch.hats[i]) {
            out << sketch.hats[i]->str();
        } else {
            out << "(zero row)";
        }
    }
    out << "\n";
    out << "hat pairs (unordered):";
    for (const auto& [a, b] : sketch.unordered_pairs) {
        out << " {" << a << "," << b << "}";
    }
    out << "\n";
    for (int i : sketch.zero_rows) {
        out << "warning: relation " << i << " has zero degree-2 part\n";
    }
    out << "note: entries depend on the primitive-root choice; only the zero pattern is "
           "canonical.\n";
    res.out = out.str();
    return res;
}

CommandResult run_mildcheck(const MildcheckOptions& opts) {
    CommandResult res;
    PresentationDocument doc;
    try {
        if (opts.document_text && !opts.primes.empty()) {
            throw std::invalid_argument("give either a document or --primes, not both");
        }
        if (opts.document_text) {
            doc = parse_document(*opts.document_text);
        } else if (!opts.primes.empty()) {
            const PresentationSketch sketch = presentation_hats(opts.p, opts.primes);
            doc.p = opts.p;
            doc.d = sketch.d;
            doc.source_primes = opts.primes;
            for (const auto& form : sketch.forms) {
                PresentationDocument::Relation rel;
                rel.kind = PresentationDocument::Relation::Kind::Form;
                rel.form_text = form.str();
                doc.relations.push_back(std::move(rel));
            }
        } else {
            throw std::invalid_argument("mildcheck needs a presentation document or --primes");
        }
    } catch (const ParseError& e) {
        res.code = kExitUsage;
        res.err = std::string(e.what()) + "\n";
        return res;
    } catch (const std::invalid_argument& e) {
        res.code = kExitUsage;
        res.err = std::string(e.what()) + "\n";
        return res;
    }

    HatResult hat_result = document_hats(doc, opts.trunc);
    if (hat_result.failure) return *hat_result.failure;

    std::ostringstream out;
    out << "p: " << doc.p << "\n";
    out << "d: " << doc.d << "\n";
    out << "relations: " << doc.relations.size() << "\n";
    out << "hats: " << hats_line(hat_result.hats) << "\n";
    out << "policy: " << policy_name(opts.policy)
        << ", self-overlap: " << (opts.self_overlap ? "on" : "off") << "\n";

    MonomialFamily family;
    family.d = doc.d;
    family.fixed = hat_result.hats;
    const FreenessVerdict verdict = is_combinatorially_free(family, opts.policy, opts.self_overlap);
    if (!verdict.free) {
        out << "combinatorially free: no\n";
        out << witness_line(*verdict.witness) << "\n";
        res.code = kExitFalse;
        res.out = out.str();
        return res;
    }
    out << "combinatorially free: yes\n";
    out << "cd(G) <= 2\n";
    out << "dim H^2(G) = " << hat_result.hats.size() << "\n";
    DegreeSpec spec;
    for (const auto& h : hat_result.hats) spec.finite.push_back(h.degree());
    out << "poincare: " << mild_poincare(doc.d, spec, opts.series_to).str() << "\n";
    res.out = out.str();
    return res;
}

CommandResult run_cut(const CutOptions& opts) {
    CommandResult res;
    PresentationSketch sketch;
    try {
        if ((opts.i0.has_value()) != (opts.j0.has_value())) {
            throw std::invalid_argument("--i0 and --j0 must be given together");
        }
        sketch = presentation_hats(opts.p, opts.primes);
    } catch (const std::invalid_argument& e) {
        res.code = kExitUsage;
        res.err = std::string(e.what()) + "\n";
        return res;
    }
    if (!sketch.zero_rows.empty()) {
        res.code = kExitInconclusive;
        res.err = "relation " + std::to_string(sketch.zero_rows.front()) +
                  " has zero degree-2 part; the cut construction needs degree-2 hats\n";
        return res;
    }
    const int d = sketch.d;
    std::vector<Monomial> hats;
    for (const auto& h : sketch.hats) hats.push_back(*h);

    std::ostringstream out;
    out << "p: " << sketch.p << "\n";
    out << "d: " << d << "\n";
    out << "relations: " << hats.size() << "\n";
    out << "hats: " << hats_line(hats) << "\n";

    MonomialFamily base;
    base.d = d;
    base.fixed = hats;
    const FreenessVerdict base_verdict = is_combinatorially_free(base);
    if (!base_verdict.free) {
        out << "combinatorially free: no\n";
        out << witness_line(*base_verdict.witness) << "\n";
        res.code = kExitFalse;
        res.out = out.str();
        return res;
    }

    // Hats computed from linking data are X_t X_s with t > s.
    std::vector<std::pair<int, int>> pairs;
    int max_s = 1, min_t = d + 1;
    for (const auto& h : hats) {
        pairs.emplace_back(h.idx[0], h.idx[1]);
        max_s = std::max(max_s, h.idx[1]);
        min_t = std::min(min_t, h.idx[0]);
    }
    int c = 0;
    if (opts.c) {
        c = *opts.c;
        if (c < 2 || !(max_s <= c && c < min_t)) {
            res.code = kExitUsage;
            res.err = "--c must satisfy 2 <= c, s <= c < t for every hat pair\n";
            return res;
        }
    } else {
        c = std::max(2, max_s);
        if (!(c < min_t)) {
            res.code = kExitUsage;
            res.err = "cannot infer a split position c (need max s <= c < min t); give --c\n";
            return res;
        }
    }
    out << "split c: " << c << "\n";

    const long long grid = static_cast<long long>(d - c) * (c - 1);
    std::optional<CutPair> cut;
    std::string mode;
    FreenessVerdict combined;
    auto certify = [&](CutPair candidate) {
        combined = certify_family_with_cut(hats, candidate, d);
        return combined.free;
    };
    if (opts.i0) {
        CutPair manual{*opts.i0, *opts.j0};
        if (manual.i0 < 2 || manual.j0 <= manual.i0 || manual.j0 > d) {
            res.code = kExitUsage;
            res.err = "need 1 < i0 < j0 <= d\n";
            return res;
        }
        if (!certify(manual)) {
            out << "cut pair: (i0, j0) = (" << manual.i0 << ", " << manual.j0
                << ") [user-specified]\n";
            out << "combined family: not combinatorially free\n";
            out << witness_line(*combined.witness) << "\n";
            res.code = kExitFalse;
            res.out = out.str();
            return res;
        }
        cut = manual;
        mode = "user-specified";
    } else {
        try {
            CutPair from_grid = choose_cut_pair(pairs, c, d);
            if (certify(from_grid)) {
                cut = from_grid;
                mode = "grid scan";
            }
        } catch (const std::domain_error&) {
            // grid exhausted; fall through to the certified search below
        }
        if (!cut) {
            for (int j0 = c + 1; j0 <= d && !cut; ++j0) {
                for (int i0 = 2; i0 < j0 && !cut; ++i0) {
                    if (certify(CutPair{i0, j0})) {
                        cut = CutPair{i0, j0};
                        mode = "beyond-grid search";
                    }
                }
            }
        }
        if (!cut) {
            out << "cut pair: none\n";
            out << "no cut pair certifies: r = " << pairs.size() << " >= (d-c)(c-1) = " << grid
                << "\n";
            res.code = kExitFalse;
            res.out = out.str();
            return res;
        }
    }

    out << "cut pair: (i0, j0) = (" << cut->i0 << ", " << cut->j0 << ") [" << mode;
    if (static_cast<long long>(pairs.size()) >= grid) {
        out << "; r = " << pairs.size() << " >= (d-c)(c-1) = " << grid;
    }
    out << "]\n";
    out << "parametric hats: X" << cut->j0 << ".X" << cut->i0 << "^n.X1, n >= 1\n";
    out << "combined family: combinatorially free\n";
    out << "split words (symbolic; arithmetic realization not verified):\n";
    for (int n = 1; n <= 3; ++n) {
        const GroupWord word = iterated_commutator(1, cut->i0, cut->j0, n);
        const Monomial hat = word_hat(word, sketch.p, d, n + 4);
        out << "  n=" << n << ": " << word.str() << "  hat: " << hat.str() << "\n";
    }
    out << "poincare: "
        << theorem_main_series(d, static_cast<int>(hats.size()), opts.series_to).str() << "\n";
    out << "dim H^2 = infinite (one relation in every degree >= 3)\n";
    res.out = out.str();
    return res;
}

CommandResult run_poincare(const PoincareOptions& opts) {
    CommandResult res;
    DegreeSpec spec;
    spec.finite = opts.rel_degrees;
    spec.tail_from = opts.tail_from;
    IntSeries series;
    try {
        series = mild_poincare(opts.d, spec, opts.upto);
    } catch (const std::invalid_argument& e) {
        res.code = kExitUsage;
        res.err = std::string(e.what()) + "\n";
        return res;
    }
    std::ostringstream out;
    out << "d: " << opts.d << "\n";
    out << "relation degrees: ";
    if (opts.rel_degrees.empty()) {
        out << "(none)";
    } else {
        for (std::size_t i = 0; i < opts.rel_degrees.size(); ++i) {
            if (i > 0) out << ",";
            out << opts.rel_degrees[i];
        }
    }
    out << "\n";
    if (opts.tail_from) {
        out << "tail: every degree >= " << *opts.tail_from << "\n";
    } else {
        out << "tail: none\n";
    }
    out << "poincare: " << series.str() << "\n";
    const auto neg = check_nonnegative(series);
    if (neg) {
        out << "nonnegative: first negative coefficient at degree " << *neg << "\n";
    } else {
        out << "nonnegative: yes\n";
    }
    res.out = out.str();
    return res;
}

CommandResult run_primesearch(const PrimesearchOptions& opts) {
    CommandResult res;
    std::vector<ResidueConstraint> constraints;
    for (const auto& text : opts.constraints) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ':') {
                parts.push_back(text.substr(start, i - start));
                start = i + 1;
            }
        }
        if (parts.size() != 4 || parts[0] != "residue" ||
            (parts[2] != "yes" && parts[2] != "no") ||
            (parts[3] != "new-mod-old" && parts[3] != "old-mod-new")) {
            res.code = kExitUsage;
            res.err = "malformed constraint '" + text +
                      "' (want residue:<ell>:<yes|no>:<new-mod-old|old-mod-new>)\n";
            return res;
        }
        ResidueConstraint c;
        try {
            c.ell = std::stoull(parts[1]);
        } catch (const std::exception&) {
            res.code = kExitUsage;
            res.err = "malformed constraint '" + text + "': bad prime\n";
            return res;
        }
        c.want_residue = parts[2] == "yes";
        c.direction = parts[3] == "new-mod-old" ? ConstraintDirection::NewModExisting
                                                : ConstraintDirection::ExistingModNew;
        constraints.push_back(c);
    }
    std::optional<std::uint64_t> found;
    try {
        found = find_prime(opts.p, constraints, opts.bound);
    } catch (const std::invalid_argument& e) {
        res.code = kExitUsage;
        res.err = std::string(e.what()) + "\n";
        return res;
    }
    res.out = found ? std::to_string(*found) + "\n" : "none\n";
    return res;
}

} // namespace mild

// mild: exact computations around mild pro-p presentations over F_p.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mild/commands.hpp"

namespace {

int emit(const mild::CommandResult& res) {
    std::cout << res.out;
    std::cerr << res.err;
    return res.code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for mild pro-p presentations over F_p"};
    app.require_subcommand(1);

    // expand
    mild::ExpandOptions expand_opts;
    auto* expand = app.add_subcommand("expand", "Magnus-expand a group word");
    expand->add_option("word", expand_opts.word_text, "word, e.g. [x1,[x2^9,x3]]")->required();
    expand->add_option("--p", expand_opts.p, "odd prime modulus")->required();
    expand->add_option("--d", expand_opts.d, "ambient rank (default: largest generator used)");
    expand->add_option("--trunc", expand_opts.trunc, "truncation degree");
    expand->add_flag("--hat", expand_opts.hat, "also print the highest term and degree");

    // linking
    mild::LinkingOptions linking_opts;
    auto* linking = app.add_subcommand("linking", "linking matrix of a tame prime set");
    linking->add_option("--p", linking_opts.p, "odd prime modulus")->required();
    linking->add_option("--primes", linking_opts.primes, "ordered tame primes")
        ->required()
        ->delimiter(',');

    // mildcheck
    mild::MildcheckOptions mild_opts;
    std::string mild_file;
    auto* mildcheck = app.add_subcommand("mildcheck", "certify combinatorial freeness of hats");
    mildcheck->add_option("file", mild_file, "presentation document");
    mildcheck->add_option("--p", mild_opts.p, "odd prime modulus");
    mildcheck->add_option("--primes", mild_opts.primes, "ordered tame primes")->delimiter(',');
    mildcheck->add_option("--trunc", mild_opts.trunc, "truncation for word relations");
    mildcheck->add_option("--series-to", mild_opts.series_to, "highest reported degree");
    bool literal = false, no_self = false;
    mildcheck->add_flag("--literal", literal, "use the literal prefix-sharing overlap reading");
    mildcheck->add_flag("--no-self-overlap", no_self, "skip self-overlap checks");

    // cut
    mild::CutOptions cut_opts;
    int cut_i0 = 0, cut_j0 = 0, cut_c = 0;
    auto* cut = app.add_subcommand("cut", "adjoin a parametric relation family");
    cut->add_option("--p", cut_opts.p, "odd prime modulus")->required();
    cut->add_option("--primes", cut_opts.primes, "ordered tame primes")->required()->delimiter(',');
    cut->add_option("--series-to", cut_opts.series_to, "highest reported degree");
    auto* oi = cut->add_option("--i0", cut_i0, "repeated letter of the parametric family");
    auto* oj = cut->add_option("--j0", cut_j0, "leading letter of the parametric family");
    auto* oc = cut->add_option("--c", cut_c, "split position");

    // poincare
    mild::PoincareOptions poi_opts;
    std::string degrees_text;
    int tail_from = 0;
    auto* poincare = app.add_subcommand("poincare", "graded dimensions of a mild quotient");
    poincare->add_option("--d", poi_opts.d, "generator count")->required();
    poincare->add_option("--rel-degrees", degrees_text, "comma-separated relation degrees");
    auto* ot = poincare->add_option("--tail-from", tail_from, "one relation in every degree >= this");
    poincare->add_option("--upto", poi_opts.upto, "highest reported degree");

    // primesearch
    mild::PrimesearchOptions ps_opts;
    auto* primesearch = app.add_subcommand("primesearch", "smallest tame prime meeting constraints");
    primesearch->add_option("--p", ps_opts.p, "odd prime modulus")->required();
    primesearch->add_option("--constraints", ps_opts.constraints,
                            "residue:<ell>:<yes|no>:<new-mod-old|old-mod-new>")
        ->delimiter(',');
    primesearch->add_option("--bound", ps_opts.bound, "search bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    if (expand->parsed()) return emit(mild::run_expand(expand_opts));
    if (linking->parsed()) return emit(mild::run_linking(linking_opts));
    if (mildcheck->parsed()) {
        if (!mild_file.empty()) {
            std::ifstream in(mild_file);
            if (!in) {
                std::cerr << "cannot open " << mild_file << "\n";
                return 2;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            mild_opts.document_text = buf.str();
        }
        if (literal) mild_opts.policy = mild::OverlapPolicy::Literal;
        if (no_self) mild_opts.self_overlap = false;
        return emit(mild::run_mildcheck(mild_opts));
    }
    if (cut->parsed()) {
        if (oi->count() > 0) cut_opts.i0 = cut_i0;
        if (oj->count() > 0) cut_opts.j0 = cut_j0;
        if (oc->count() > 0) cut_opts.c = cut_c;
        return emit(mild::run_cut(cut_opts));
    }
    if (poincare->parsed()) {
        if (!degrees_text.empty()) {
            std::size_t start = 0;
            for (std::size_t i = 0; i <= degrees_text.size(); ++i) {
                if (i == degrees_text.size() || degrees_text[i] == ',') {
                    const std::string part = degrees_text.substr(start, i - start);
                    start = i + 1;
                    if (part.empty()) continue;
                    try {
                        poi_opts.rel_degrees.push_back(std::stoi(part));
                    } catch (const std::exception&) {
                        std::cerr << "bad relation degree '" << part << "'\n";
                        return 2;
                    }
                }
            }
        }
        if (ot->count() > 0) poi_opts.tail_from = tail_from;
        return emit(mild::run_poincare(poi_opts));
    }
    if (primesearch->parsed()) return emit(mild::run_primesearch(ps_opts));
    return 2;
}

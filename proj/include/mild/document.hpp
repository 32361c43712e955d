#ifndef MILD_DOCUMENT_HPP
#define MILD_DOCUMENT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mild/series.hpp"
#include "mild/words.hpp"

namespace mild {

// Line-oriented presentation document:
//
//   # comment
//   p=3
//   d=5
//   primes=31,19,13,337,7        (optional metadata)
//   gen=x1,x2,x3,x4,x5           (optional labels)
//   rel=word:[x1,[x2,x3]]
//   rel=form:2*X1.X3 + 1*X3.X1
//
// Relations are either words in the group-word grammar or explicit initial
// forms in the series syntax.
struct PresentationDocument {
    struct Relation {
        enum class Kind { Word, Form };
        Kind kind = Kind::Word;
        GroupWord word;                   // Kind::Word
        std::string form_text;            // Kind::Form (parsed against p, d)
    };

    long long p = 3;
    int d = 0;
    std::vector<std::string> generator_labels;
    std::vector<std::uint64_t> source_primes;
    std::vector<Relation> relations;

    TruncatedSeries parse_form(const Relation& rel, int trunc) const;
};

PresentationDocument parse_document(std::string_view text);
std::string document_str(const PresentationDocument& doc);

} // namespace mild

#endif

#include "mild/document.hpp"

#include <sstream>
#include <stdexcept>

#include "mild/errors.hpp"
#include "mild/modular.hpp"

namespace mild {

namespace {

std::string_view trim(std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t' || v.front() == '\r')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) v.remove_suffix(1);
    return v;
}

std::vector<std::string_view> split(std::string_view v, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= v.size(); ++i) {
        if (i == v.size() || v[i] == sep) {
            out.push_back(trim(v.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("document line " + std::to_string(line) + ": " + what);
}

} // namespace

TruncatedSeries PresentationDocument::parse_form(const Relation& rel, int trunc) const {
    if (rel.kind != Relation::Kind::Form) {
        throw std::invalid_argument("parse_form: relation is a word");
    }
    return TruncatedSeries::parse(rel.form_text, p, d, trunc);
}

PresentationDocument parse_document(std::string_view text) {
    PresentationDocument doc;
    bool have_p = false, have_d = false;
    std::vector<std::pair<int, std::string>> rel_texts;

    int lineno = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != '\n') continue;
        ++lineno;
        std::string_view line = trim(text.substr(start, i - start));
        start = i + 1;
        if (line.empty() || line.front() == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(lineno, "expected key=value");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "p") {
            doc.p = std::stoll(std::string(value));
            have_p = true;
        } else if (key == "d") {
            doc.d = std::stoi(std::string(value));
            have_d = true;
        } else if (key == "primes") {
            for (auto part : split(value, ',')) {
                if (part.empty()) fail(lineno, "empty prime entry");
                doc.source_primes.push_back(std::stoull(std::string(part)));
            }
        } else if (key == "gen") {
            for (auto part : split(value, ',')) doc.generator_labels.emplace_back(part);
        } else if (key == "rel") {
            rel_texts.emplace_back(lineno, std::string(value));
        } else {
            fail(lineno, "unknown key '" + std::string(key) + "'");
        }
    }

    if (!have_p) throw ParseError("document: missing p=");
    if (!have_d) throw ParseError("document: missing d=");
    if (doc.p < 3 || !is_prime(static_cast<std::uint64_t>(doc.p))) {
        throw ParseError("document: p must be an odd prime");
    }
    if (doc.d < 1) throw ParseError("document: d must be >= 1");

    for (const auto& [line, value] : rel_texts) {
        PresentationDocument::Relation rel;
        if (value.rfind("word:", 0) == 0) {
            rel.kind = PresentationDocument::Relation::Kind::Word;
            rel.word = parse_word(std::string_view(value).substr(5));
            if (rel.word.max_generator() > doc.d) {
                fail(line, "relation uses a generator beyond d");
            }
        } else if (value.rfind("form:", 0) == 0) {
            rel.kind = PresentationDocument::Relation::Kind::Form;
            rel.form_text = value.substr(5);
            doc.parse_form(rel, 3); // validate eagerly
        } else {
            fail(line, "relation must start with 'word:' or 'form:'");
        }
        doc.relations.push_back(std::move(rel));
    }
    return doc;
}

std::string document_str(const PresentationDocument& doc) {
    std::ostringstream out;
    out << "p=" << doc.p << "\n";
    out << "d=" << doc.d << "\n";
    if (!doc.source_primes.empty()) {
        out << "primes=";
        for (std::size_t i = 0; i < doc.source_primes.size(); ++i) {
            if (i > 0) out << ",";
            out << doc.source_primes[i];
        }
        out << "\n";
    }
    if (!doc.generator_labels.empty()) {
        out << "gen=";
        for (std::size_t i = 0; i < doc.generator_labels.size(); ++i) {
            if (i > 0) out << ",";
            out << doc.generator_labels[i];
        }
        out << "\n";
    }
    for (const auto& rel : doc.relations) {
        if (rel.kind == PresentationDocument::Relation::Kind::Word) {
            out << "rel=word:" << rel.word.str() << "\n";
        } else {
            out << "rel=form:" << rel.form_text << "\n";
        }
    }
    return out.str();
}

} // namespace mild

#pragma once

// Text formats.  Structure files:
//
//     # comment
//     participants 5
//     k 3
//     minset 1 2 3
//     minset 2 3 4
//
// Sets elsewhere (certificate blocks) are written {1 4}; shares as
// `participant <i> share <v>` lines under a `p`/`k`/`seed` header.  All
// three formats round-trip bit-exactly; serialization emits minimal sets
// in lexicographic order.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "homsec/access_structure.hpp"
#include "homsec/bounds.hpp"
#include "homsec/errors.hpp"
#include "homsec/linear_scheme.hpp"
#include "homsec/participant_set.hpp"
#include "homsec/rational.hpp"

namespace homsec::io {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

inline std::int64_t parse_int(const std::string& token, int line) {
    try {
        std::size_t used = 0;
        const std::int64_t value = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw Error(errc::syntax_error, "expected an integer, got '" + token + "'", line);
    }
}

// ---------------------------------------------------------------------------
// structure files
// ---------------------------------------------------------------------------

inline AccessStructure parse_structure(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, k = -1;
    std::vector<ParticipantSet> basis;
    std::unordered_set<std::uint64_t> seen;

    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        const std::string& directive = tokens[0];

        if (directive == "participants") {
            if (n != -1) throw Error(errc::syntax_error, "repeated 'participants'", line_no);
            if (tokens.size() != 2) throw Error(errc::syntax_error, "usage: participants <n>", line_no);
            const std::int64_t v = parse_int(tokens[1], line_no);
            if (v < 1 || v > kMaxParticipants)
                throw Error(errc::out_of_range, "participant count out of range", line_no);
            n = static_cast<int>(v);
        } else if (directive == "k") {
            if (k != -1) throw Error(errc::syntax_error, "repeated 'k'", line_no);
            if (tokens.size() != 2) throw Error(errc::syntax_error, "usage: k <k>", line_no);
            const std::int64_t v = parse_int(tokens[1], line_no);
            if (v < 2 || v > kMaxParticipants)
                throw Error(errc::invalid_size, "uniformity out of range", line_no);
            k = static_cast<int>(v);
        } else if (directive == "minset") {
            if (n == -1 || k == -1)
                throw Error(errc::syntax_error, "minset before participants/k header", line_no);
            ParticipantSet s;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const std::int64_t m = parse_int(tokens[i], line_no);
                if (m < 1 || m > n)
                    throw Error(errc::out_of_range,
                                "participant " + std::to_string(m) + " outside 1.." +
                                    std::to_string(n),
                                line_no);
                if (s.contains(static_cast<int>(m)))
                    throw Error(errc::wrong_cardinality, "member listed twice", line_no);
                s = s.with(static_cast<int>(m));
            }
            if (s.size() != k)
                throw Error(errc::wrong_cardinality,
                            "minset has " + std::to_string(s.size()) + " members, expected " +
                                std::to_string(k),
                            line_no);
            if (!seen.insert(s.bits()).second)
                throw Error(errc::duplicate_minset, "duplicate minset " + s.str(), line_no);
            basis.push_back(s);
        } else {
            throw Error(errc::syntax_error, "unknown directive '" + directive + "'", line_no);
        }
    }

    if (n == -1 || k == -1)
        throw Error(errc::syntax_error, "missing participants/k header", line_no);
    return AccessStructure::build(n, k, basis);  // coverage, emptiness, k <= n
}

inline std::string serialize_structure(const AccessStructure& gamma) {
    std::ostringstream out;
    out << "participants " << gamma.n() << "\n";
    out << "k " << gamma.k() << "\n";
    for (const ParticipantSet& s : gamma.basis()) {
        out << "minset";
        for (int m : s.members()) out << ' ' << m;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// braced set syntax: {1 4}, {} for the empty set
// ---------------------------------------------------------------------------

inline std::string format_set(ParticipantSet s) { return s.str(); }

// Consumes one {..} group from a token stream that splits on whitespace,
// where '{' and '}' stick to the adjacent numbers ("{1", "4}", "{}").
class SetScanner {
public:
    explicit SetScanner(const std::string& text, int line) : line_(line) {
        std::istringstream in(text);
        std::string t;
        while (in >> t) tokens_.push_back(t);
    }

    bool done() const { return pos_ >= tokens_.size(); }

    ParticipantSet next() {
        if (done()) throw Error(errc::syntax_error, "expected a {..} set", line_);
        std::string tok = tokens_[pos_++];
        if (tok.front() != '{') throw Error(errc::syntax_error, "expected '{'", line_);
        tok.erase(tok.begin());
        ParticipantSet s;
        for (;;) {
            const bool closes = !tok.empty() && tok.back() == '}';
            if (closes) tok.pop_back();
            if (!tok.empty()) {
                const std::int64_t m = parse_int(tok, line_);
                if (m < 1 || m > kMaxParticipants)
                    throw Error(errc::out_of_range, "set member out of range", line_);
                s = s.with(static_cast<int>(m));
            }
            if (closes) return s;
            if (done()) throw Error(errc::syntax_error, "unterminated set", line_);
            tok = tokens_[pos_++];
        }
    }

private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
    int line_;
};

// ---------------------------------------------------------------------------
// certificate blocks
// ---------------------------------------------------------------------------

inline std::string serialize_certificate(const IndependenceCertificate& cert) {
    std::ostringstream out;
    out << "chain:";
    for (const ParticipantSet& b : cert.chain) out << ' ' << format_set(b);
    out << "\n";
    for (std::size_t i = 0; i < cert.witnesses.size(); ++i)
        out << "witness " << i + 1 << ": " << format_set(cert.witnesses[i]) << "\n";
    out << "A: " << format_set(cert.a_set) << "\n";
    out << "A-qualified: " << (cert.a_qualified ? "yes" : "no") << "\n";
    out << "bound: " << cert.bound.str() << "\n";
    return out.str();
}

inline IndependenceCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    IndependenceCertificate cert;
    bool have_chain = false, have_a = false, have_flag = false, have_bound = false;
    std::size_t next_witness = 1;

    while (std::getline(in, line)) {
        ++line_no;
        if (tokenize(line).empty()) continue;
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw Error(errc::syntax_error, "expected 'key: value'", line_no);
        const std::string key = line.substr(0, colon);
        const std::string value = line.substr(colon + 1);

        if (key == "chain") {
            SetScanner scan(value, line_no);
            while (!scan.done()) cert.chain.push_back(scan.next());
            have_chain = true;
        } else if (key.rfind("witness ", 0) == 0) {
            const std::int64_t index = parse_int(key.substr(8), line_no);
            if (index != static_cast<std::int64_t>(next_witness))
                throw Error(errc::syntax_error, "witness lines must be numbered 1..m in order",
                            line_no);
            SetScanner scan(value, line_no);
            cert.witnesses.push_back(scan.next());
            if (!scan.done()) throw Error(errc::syntax_error, "one set per witness", line_no);
            ++next_witness;
        } else if (key == "A") {
            SetScanner scan(value, line_no);
            cert.a_set = scan.next();
            have_a = true;
        } else if (key == "A-qualified") {
            const std::vector<std::string> tokens = tokenize(value);
            if (tokens.size() != 1 || (tokens[0] != "yes" && tokens[0] != "no"))
                throw Error(errc::syntax_error, "A-qualified must be yes or no", line_no);
            cert.a_qualified = tokens[0] == "yes";
            have_flag = true;
        } else if (key == "bound") {
            const std::vector<std::string> tokens = tokenize(value);
            const std::size_t slash = tokens.size() == 1 ? tokens[0].find('/') : std::string::npos;
            if (slash == std::string::npos)
                throw Error(errc::syntax_error, "bound must be <num>/<den>", line_no);
            cert.bound = Rational(parse_int(tokens[0].substr(0, slash), line_no),
                                  parse_int(tokens[0].substr(slash + 1), line_no));
            have_bound = true;
        } else {
            throw Error(errc::syntax_error, "unknown certificate key '" + key + "'", line_no);
        }
    }
    if (!have_chain || !have_a || !have_flag || !have_bound)
        throw Error(errc::syntax_error, "incomplete certificate block", line_no);
    return cert;
}

// ---------------------------------------------------------------------------
// share tables
// ---------------------------------------------------------------------------

inline std::string serialize_share_table(const ShareTable& table, bool include_secret = true) {
    std::ostringstream out;
    out << "p " << table.p << "\n";
    out << "k " << table.k << "\n";
    out << "seed " << table.seed << "\n";
    if (include_secret && table.secret) out << "secret " << *table.secret << "\n";
    for (const auto& [participant, share] : table.shares)
        out << "participant " << participant << " share " << share << "\n";
    return out.str();
}

inline ShareTable parse_share_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    ShareTable table;
    bool have_p = false, have_k = false, have_seed = false;

    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        const std::string& directive = tokens[0];

        if (directive == "p" && tokens.size() == 2) {
            table.p = static_cast<std::uint64_t>(parse_int(tokens[1], line_no));
            have_p = true;
        } else if (directive == "k" && tokens.size() == 2) {
            table.k = static_cast<int>(parse_int(tokens[1], line_no));
            have_k = true;
        } else if (directive == "seed" && tokens.size() == 2) {
            table.seed = static_cast<std::uint64_t>(parse_int(tokens[1], line_no));
            have_seed = true;
        } else if (directive == "secret" && tokens.size() == 2) {
            table.secret = static_cast<std::uint64_t>(parse_int(tokens[1], line_no));
        } else if (directive == "participant" && tokens.size() == 4 && tokens[2] == "share") {
            const std::int64_t who = parse_int(tokens[1], line_no);
            if (who < 1 || who > kMaxParticipants)
                throw Error(errc::out_of_range, "participant out of range", line_no);
            table.shares.emplace_back(static_cast<int>(who),
                                      static_cast<std::uint64_t>(parse_int(tokens[3], line_no)));
        } else {
            throw Error(errc::syntax_error, "unrecognized share-table line", line_no);
        }
    }
    if (!have_p || !have_k || !have_seed)
        throw Error(errc::syntax_error, "missing p/k/seed header", line_no);
    return table;
}

}  // namespace homsec::io

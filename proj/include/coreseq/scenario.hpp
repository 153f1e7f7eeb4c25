#pragma once

/**
 * @file scenario.hpp
 * @brief Line-oriented scenario files describing tensor systems, plus the
 *        builtin scenarios shipped with the library.
 *
 * @code
 * [system] name=z3z3 size=3
 * [orbit M] name=six-dimensional module
 * channel dim forward prefix=[] tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
 * [matrix]
 * T[1][1] = "w"
 * [initial]
 * v[1] = "1"
 * @endcode
 */

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "omega.hpp"

namespace coreseq {

/// Either a tensor system or a bare list of published terms.
struct Scenario {
    std::string name;
    std::optional<TensorSystem> system;
    std::vector<Rational> s_prefix;
    std::vector<Rational> expected_rec;
    std::string notes;

    bool is_prefix_only() const { return !system.has_value(); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Drops a trailing `#` comment that is not inside a quoted literal.
inline std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        else if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

inline bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

struct scenario_reader {
    std::size_t line = 0;

    [[noreturn]] void fail(std::string const& what) const { throw parse_error(what, 0, line); }

    std::size_t to_index(std::string_view s) const {
        s = trim(s);
        if (s.empty()) fail("missing index");
        std::size_t v = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad index '" + std::string(s) + "'");
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
    }

    /// `key=value` pairs separated by spaces; the last key may swallow the rest.
    std::map<std::string, std::string> key_values(std::string_view s, std::string_view greedy = "") const {
        std::map<std::string, std::string> out;
        s = trim(s);
        while (!s.empty()) {
            auto eq = s.find('=');
            if (eq == std::string_view::npos) fail("expected key=value in '" + std::string(s) + "'");
            std::string key(trim(s.substr(0, eq)));
            s = s.substr(eq + 1);
            if (key == greedy) {
                out[key] = std::string(trim(s));
                break;
            }
            auto sp = s.find(' ');
            out[key] = std::string(trim(s.substr(0, sp)));
            s = sp == std::string_view::npos ? std::string_view() : trim(s.substr(sp));
        }
        return out;
    }

    LaurentPoly quoted_laurent(std::string_view s) const {
        s = trim(s);
        if (s.size() < 2 || s.front() != '"' || s.back() != '"') fail("expected a quoted Laurent literal");
        try {
            return LaurentPoly::parse(s.substr(1, s.size() - 2));
        } catch (parse_error const& e) {
            fail("bad Laurent literal: " + e.message);
        }
    }

    void channel(std::string_view s, OrbitRep& orbit) const {
        std::istringstream in{std::string(s)};
        std::string word, name, dir;
        in >> word >> name >> dir;
        if (name.empty() || (dir != "forward" && dir != "backward")) fail("expected 'channel <name> forward|backward ...'");
        std::string rest;
        std::getline(in, rest);
        std::string_view r = trim(rest);

        ChannelDirection d;
        d.first_index = dir == "forward" ? 0 : 1;
        if (starts_with(r, "prefix=")) {
            r.remove_prefix(7);
            if (r.empty() || r.front() != '[') fail("prefix must be a bracketed list");
            auto close = r.find(']');
            if (close == std::string_view::npos) fail("unterminated prefix list");
            try {
                d.prefix = parse_rational_list(r.substr(1, close - 1));
            } catch (parse_error const& e) {
                fail("bad prefix: " + e.message);
            }
            r = trim(r.substr(close + 1));
        }
        if (starts_with(r, "tail=")) {
            r.remove_prefix(5);
            try {
                d.tail = QuasiPoly::parse(r);
            } catch (parse_error const& e) {
                fail("bad tail: " + e.message);
            }
            r = {};
        }
        if (!r.empty()) fail("unexpected text '" + std::string(r) + "'");

        auto& ch = orbit.channels[name];
        ch.name = name;
        (dir == "forward" ? ch.forward : ch.backward) = std::move(d);
    }
};

} // namespace detail

/// Parses and validates a scenario file body.
inline Scenario parse_scenario(std::string_view text) {
    detail::scenario_reader rd;
    Scenario sc;
    std::optional<std::size_t> declared;
    std::vector<OrbitRep> orbits;
    std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> t_entries;
    std::map<std::size_t, LaurentPoly> v_entries;
    std::string section;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++rd.line;
        auto s = detail::trim(detail::strip_comment(raw));
        if (s.empty()) continue;

        if (s.front() == '[') {
            auto close = s.find(']');
            if (close == std::string_view::npos) rd.fail("unterminated section header");
            auto head = detail::trim(s.substr(1, close - 1));
            s = detail::trim(s.substr(close + 1));
            if (head == "system") {
                section = "system";
                auto kv = rd.key_values(s);
                for (auto const& [k, v] : kv) {
                    if (k == "name") sc.name = v;
                    else if (k == "size") declared = rd.to_index(v);
                    else rd.fail("unknown system key '" + k + "'");
                }
                continue;
            }
            if (detail::starts_with(head, "orbit")) {
                section = "orbit";
                OrbitRep o;
                o.id = std::string(detail::trim(head.substr(5)));
                if (o.id.empty()) rd.fail("orbit header needs an id");
                for (auto const& prev : orbits)
                    if (prev.id == o.id) rd.fail("duplicate orbit '" + o.id + "'");
                auto kv = rd.key_values(s, "name");
                if (kv.count("name")) o.name = kv["name"];
                orbits.push_back(std::move(o));
                continue;
            }
            if (head == "matrix" || head == "initial") {
                section = std::string(head);
                if (s.empty()) continue;
            } else {
                rd.fail("unknown section '" + std::string(head) + "'");
            }
        }

        if (detail::starts_with(s, "channel ")) {
            if (section != "orbit" || orbits.empty()) rd.fail("channel line outside an orbit section");
            rd.channel(s, orbits.back());
        } else if (section == "matrix" && detail::starts_with(s, "T[")) {
            auto b1 = s.find(']');
            if (b1 == std::string_view::npos || s.substr(b1 + 1, 1) != "[") rd.fail("expected T[i][j]");
            auto b2 = s.find(']', b1 + 1);
            auto eq = s.find('=', b2);
            if (b2 == std::string_view::npos || eq == std::string_view::npos) rd.fail("expected T[i][j] = \"...\"");
            std::size_t i = rd.to_index(s.substr(2, b1 - 2)), j = rd.to_index(s.substr(b1 + 2, b2 - b1 - 2));
            if (i == 0 || j == 0) rd.fail("matrix indices are 1-based");
            t_entries[{i, j}] = rd.quoted_laurent(s.substr(eq + 1));
        } else if (section == "initial" && detail::starts_with(s, "v[")) {
            auto b = s.find(']');
            auto eq = s.find('=', b);
            if (b == std::string_view::npos || eq == std::string_view::npos) rd.fail("expected v[j] = \"...\"");
            std::size_t j = rd.to_index(s.substr(2, b - 2));
            if (j == 0) rd.fail("initial indices are 1-based");
            v_entries[j] = rd.quoted_laurent(s.substr(eq + 1));
        } else {
            rd.fail("unrecognised line '" + std::string(s) + "'");
        }
    }

    std::size_t n = orbits.size();
    if (declared && *declared != n)
        throw invalid_argument("size=" + std::to_string(*declared) + " but " + std::to_string(n) + " orbits declared");
    TensorSystem sys;
    sys.name = sc.name;
    sys.t = LMatrix(n, n);
    sys.initial.assign(n, LaurentPoly());
    for (auto const& [ij, p] : t_entries) {
        if (ij.first > n || ij.second > n)
            throw invalid_argument("T[" + std::to_string(ij.first) + "][" + std::to_string(ij.second) + "] is outside a " +
                                   std::to_string(n) + "x" + std::to_string(n) + " system");
        sys.t(ij.first - 1, ij.second - 1) = p;
    }
    for (auto const& [j, p] : v_entries) {
        if (j > n) throw invalid_argument("v[" + std::to_string(j) + "] is outside a system of size " + std::to_string(n));
        sys.initial[j - 1] = p;
    }
    sys.orbits = std::move(orbits);
    sys.validate();
    sc.system = std::move(sys);
    return sc;
}

inline std::string scenario_to_string(TensorSystem const& sys) {
    std::string out = "[system] name=" + sys.name + " size=" + std::to_string(sys.size()) + "\n";
    auto direction = [](std::string const& name, char const* dir, ChannelDirection const& d) {
        std::string line = "channel " + name + " " + dir;
        if (!d.prefix.empty() || !d.tail) line += " prefix=[" + join(d.prefix, ",") + "]";
        if (d.tail) line += " tail=" + d.tail->to_string();
        return line + "\n";
    };
    for (auto const& o : sys.orbits) {
        out += "[orbit " + o.id + "]";
        if (!o.name.empty()) out += " name=" + o.name;
        out += "\n";
        for (auto const& [name, ch] : o.channels) {
            out += direction(name, "forward", ch.forward);
            out += direction(name, "backward", ch.backward);
        }
    }
    out += "[matrix]\n";
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = 0; j < sys.size(); ++j)
            if (!sys.t(i, j).is_zero())
                out += "T[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] = \"" + sys.t(i, j).to_string() + "\"\n";
    out += "[initial]\n";
    for (std::size_t j = 0; j < sys.size(); ++j)
        if (!sys.initial[j].is_zero()) out += "v[" + std::to_string(j + 1) + "] = \"" + sys.initial[j].to_string() + "\"\n";
    return out;
}

namespace builtin {

/// Jordan blocks J1, J2, J3 over F_7 with M = J2. Omega swaps J_m and J_{7-m},
/// so dimensions alternate between m and 7 - m; every socle is simple.
inline constexpr char const* c7 = R"(
[system] name=c7 size=3
[orbit J1] name=trivial module
channel dim forward tail=quasipoly T=2 start=0 polys=[1; 6]
channel dim backward tail=quasipoly T=2 start=1 polys=[1; 6]
channel soc forward tail=quasipoly T=1 start=0 polys=[1]
channel soc backward tail=quasipoly T=1 start=1 polys=[1]
channel len forward tail=quasipoly T=2 start=0 polys=[1; 6]
channel len backward tail=quasipoly T=2 start=1 polys=[1; 6]
[orbit J2] name=Jordan block of size 2
channel dim forward tail=quasipoly T=2 start=0 polys=[2; 5]
channel dim backward tail=quasipoly T=2 start=1 polys=[2; 5]
channel soc forward tail=quasipoly T=1 start=0 polys=[1]
channel soc backward tail=quasipoly T=1 start=1 polys=[1]
channel len forward tail=quasipoly T=2 start=0 polys=[2; 5]
channel len backward tail=quasipoly T=2 start=1 polys=[2; 5]
[orbit J3] name=Jordan block of size 3
channel dim forward tail=quasipoly T=2 start=0 polys=[3; 4]
channel dim backward tail=quasipoly T=2 start=1 polys=[3; 4]
channel soc forward tail=quasipoly T=1 start=0 polys=[1]
channel soc backward tail=quasipoly T=1 start=1 polys=[1]
channel len forward tail=quasipoly T=2 start=0 polys=[3; 4]
channel len backward tail=quasipoly T=2 start=1 polys=[3; 4]
[matrix]
T[1][2] = "1"
T[2][1] = "1"
T[2][3] = "1"
T[3][2] = "1"
T[3][3] = "w"
[initial]
v[2] = "1"
)";

/// Z/3 x Z/3 with the six-dimensional module M, its dual and the induced
/// module N. Channels were harvested with the finite-field oracle.
inline constexpr char const* z3z3 = R"(
[system] name=z3z3 size=3
[orbit M] name=six-dimensional module
channel dim forward tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
channel dim backward tail=quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]
channel soc forward prefix=[2] tail=quasipoly T=1 start=1 polys=[2*n]
channel soc backward tail=quasipoly T=1 start=1 polys=[2 + 2*n]
channel len forward tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
channel len backward tail=quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]
[orbit Mdual] name=dual of M
channel dim forward tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
channel dim backward tail=quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]
channel soc forward prefix=[2] tail=quasipoly T=1 start=1 polys=[2*n]
channel soc backward tail=quasipoly T=1 start=1 polys=[2 + 2*n]
channel len forward tail=quasipoly T=2 start=0 polys=[6 + 9*n; 3 + 9*n]
channel len backward tail=quasipoly T=2 start=1 polys=[6 + 9*n; 3 + 9*n]
[orbit N] name=induced from a cyclic subgroup
channel dim forward tail=quasipoly T=2 start=0 polys=[3; 6]
channel dim backward tail=quasipoly T=2 start=1 polys=[3; 6]
channel soc forward tail=quasipoly T=1 start=0 polys=[1]
channel soc backward tail=quasipoly T=1 start=1 polys=[1]
channel len forward tail=quasipoly T=2 start=0 polys=[3; 6]
channel len backward tail=quasipoly T=2 start=1 polys=[3; 6]
[matrix]
T[1][1] = "w"
T[1][2] = "w^-1"
T[1][3] = "1"
T[2][1] = "w^-1"
T[2][2] = "w"
T[2][3] = "1"
T[3][3] = "3*w"
[initial]
v[1] = "1"
)";

inline std::vector<std::string> ids() { return {"c7", "z3z3", "s10-prefix", "s9-prefix"}; }

} // namespace builtin

/// `builtin:<id>` or a bare builtin id selects a shipped scenario; anything
/// else is read as a file path.
inline Scenario load_scenario(std::string const& source) {
    std::string id = detail::starts_with(source, "builtin:") ? source.substr(8) : source;
    if (id == "c7") return parse_scenario(builtin::c7);
    if (id == "z3z3") return parse_scenario(builtin::z3z3);
    auto prefix = [&](std::string name, std::vector<Rational> terms, std::vector<Rational> rec, std::string notes) {
        Scenario sc;
        sc.name = std::move(name);
        sc.s_prefix = std::move(terms);
        sc.expected_rec = std::move(rec);
        sc.notes = std::move(notes);
        return sc;
    };
    if (id == "s10-prefix")
        return prefix("s10-prefix", parse_rational_list("1,4,19,94,469,2344"), parse_rational_list("1,25,-25"),
                      "summand counts for the (9,1) permutation module of S10 in characteristic 5");
    if (id == "s9-prefix")
        return prefix("s9-prefix", parse_rational_list("1,4,35,310,2789,25096"), parse_rational_list("9,1,-9"),
                      "summand counts for the Young module Y(7,2) of S9 in characteristic 3");
    if (detail::starts_with(source, "builtin:")) throw invalid_argument("unknown builtin scenario '" + id + "'");

    std::ifstream in(source);
    if (!in) throw invalid_argument("cannot open scenario file '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

} // namespace coreseq

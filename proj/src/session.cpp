#include "tcx/session.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "tcx/parse.hpp"

namespace tcx {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("session line " + std::to_string(line) + ": " + msg, line);
}

const std::set<std::string> kReserved = {"square", "asserted", "jacobian"};

}  // namespace

SessionFile parse_session(const std::string& text) {
    SessionFile out;
    out.source = text;

    std::optional<std::uint64_t> p;
    std::vector<std::string> vars;
    std::optional<MonomialOrder> order;
    std::vector<std::string> mod_texts;

    struct Entry {
        std::size_t line;
        std::string kind, name, payload;
    };
    std::vector<Entry> entries;
    std::set<std::string> names;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) fail(lineno, "expected '<keyword>: ...'");
        std::string head = trim(line.substr(0, colon));
        std::string payload = trim(line.substr(colon + 1));
        auto head_tokens = split_ws(head);
        if (head_tokens.empty()) fail(lineno, "missing keyword");
        const std::string& kw = head_tokens[0];

        if (kw == "char") {
            if (p) fail(lineno, "duplicate 'char'");
            try {
                p = std::stoull(payload);
            } catch (...) {
                fail(lineno, "malformed characteristic '" + payload + "'");
            }
        } else if (kw == "vars") {
            if (!vars.empty()) fail(lineno, "duplicate 'vars'");
            for (const auto& piece : split_list(payload, ','))
                for (const auto& v : split_ws(piece)) {
                    if (kReserved.count(v)) fail(lineno, "reserved word used as variable: " + v);
                    vars.push_back(v);
                }
            if (vars.empty()) fail(lineno, "no variables declared");
        } else if (kw == "order") {
            if (order) fail(lineno, "duplicate 'order'");
            if (payload == "lex")
                order = MonomialOrder::lex();
            else if (payload == "grevlex")
                order = MonomialOrder::grevlex();
            else
                fail(lineno, "unknown order '" + payload + "' (lex or grevlex)");
        } else if (kw == "mod") {
            for (const auto& piece : split_list(payload, ','))
                if (!piece.empty()) mod_texts.push_back(piece);
        } else if (kw == "dim") {
            try {
                out.dim = static_cast<std::uint32_t>(std::stoul(payload));
            } catch (...) {
                fail(lineno, "malformed dimension '" + payload + "'");
            }
        } else if (kw == "ideal" || kw == "elem" || kw == "testelem") {
            if (head_tokens.size() != 2) fail(lineno, "expected '" + kw + " <name>: ...'");
            const std::string& name = head_tokens[1];
            if (!names.insert(name).second) fail(lineno, "duplicate name '" + name + "'");
            entries.push_back(Entry{lineno, kw, name, payload});
        } else {
            fail(lineno, "unknown keyword '" + kw + "'");
        }
    }

    if (!p) fail(0, "missing 'char'");
    if (vars.empty()) fail(0, "missing 'vars'");
    if (!order) fail(0, "missing 'order'");

    ContextPtr ambient;
    try {
        ambient = make_context(*p, vars, *order);
    } catch (const DomainError& e) {
        throw ParseError(std::string("session header: ") + e.what(), 0);
    }
    if (mod_texts.empty()) {
        out.ctx = ambient;
    } else {
        std::vector<Polynomial> defining;
        for (const auto& t : mod_texts) defining.push_back(parse_poly(t, ambient));
        out.ctx = make_quotient(ambient, defining);
    }

    for (const auto& entry : entries) {
        try {
            if (entry.kind == "ideal") {
                std::vector<Polynomial> gens;
                for (const auto& piece : split_list(entry.payload, ','))
                    if (!piece.empty()) gens.push_back(parse_poly(piece, out.ctx));
                out.ideal_names.push_back(entry.name);
                out.ideals.emplace(entry.name, Ideal(out.ctx, std::move(gens)));
            } else if (entry.kind == "elem") {
                out.element_names.push_back(entry.name);
                out.elements.emplace(entry.name, parse_poly(entry.payload, out.ctx));
            } else {
                // trailing flags: square / asserted / jacobian
                std::string body = entry.payload;
                bool square = false;
                Provenance prov = Provenance::user_asserted;
                for (;;) {
                    std::size_t sp = body.find_last_of(" \t");
                    if (sp == std::string::npos) break;
                    std::string last = trim(body.substr(sp + 1));
                    if (last == "square") {
                        square = true;
                    } else if (last == "asserted") {
                        prov = Provenance::user_asserted;
                    } else if (last == "jacobian") {
                        prov = Provenance::jacobian_derived;
                    } else {
                        break;
                    }
                    body = trim(body.substr(0, sp));
                }
                Polynomial poly = parse_poly(body, out.ctx);
                out.test_element_names.push_back(entry.name);
                out.test_elements.emplace(
                    entry.name, square ? make_square_test_element(poly, prov)
                                       : make_test_element(poly, prov));
            }
        } catch (const ParseError& e) {
            fail(entry.line, e.what());
        } catch (const DomainError& e) {
            fail(entry.line, e.what());
        }
    }
    return out;
}

SessionFile load_session(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open session file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_session(buf.str());
}

}  // namespace tcx

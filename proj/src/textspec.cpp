#include "fano/textspec.hpp"

#include <algorithm>
#include <cctype>

#include "fano/classify.hpp"

namespace fano {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    void expect(char c) {
        if (eof() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    std::string word() {
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a word");
        return s.substr(start, pos - start);
    }
    int integer() {
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (s[start] == '-' && pos == start + 1)) fail("expected an integer");
        return std::stoi(s.substr(start, pos - start));
    }
    std::vector<int> int_list() {
        std::vector<int> v{integer()};
        while (peek() == ',') {
            ++pos;
            v.push_back(integer());
        }
        return v;
    }
};

SpecNode parse_node(Cursor& cur);

SpecNode parse_ci(Cursor& cur) {
    std::optional<int> n;
    std::optional<std::vector<int>> weights, degrees;
    while (true) {
        cur.skip_ws();
        if (cur.eof() || cur.peek() == ')') break;
        std::size_t key_pos = cur.pos;
        std::string key = cur.word();
        cur.expect('=');
        if (key == "n") {
            if (n) throw ParseError("duplicate key 'n'", key_pos);
            n = cur.integer();
        } else if (key == "w") {
            if (weights) throw ParseError("duplicate key 'w'", key_pos);
            weights = cur.int_list();
        } else if (key == "d") {
            if (degrees) throw ParseError("duplicate key 'd'", key_pos);
            degrees = cur.int_list();
        } else {
            throw ParseError("unknown key '" + key + "' for ci", key_pos);
        }
    }
    if (!n) cur.fail("ci requires n=<int>");
    if (*n < 1) cur.fail("ci requires n >= 1");
    std::vector<int> w = weights.value_or(std::vector<int>(*n + 1, 1));
    if (static_cast<int>(w.size()) != *n + 1)
        cur.fail("weight list must have n+1 entries");
    std::vector<int> d = degrees.value_or(std::vector<int>{});
    std::sort(d.begin(), d.end(), std::greater<>());
    std::sort(w.begin(), w.end());
    return SpecNode{CiNode{CompleteIntersectionSpec{std::move(w), std::move(d)}}};
}

SpecNode parse_grass(Cursor& cur) {
    std::optional<int> k, n;
    while (true) {
        cur.skip_ws();
        if (cur.eof() || cur.peek() == ')') break;
        std::size_t key_pos = cur.pos;
        std::string key = cur.word();
        cur.expect('=');
        if (key == "k") {
            if (k) throw ParseError("duplicate key 'k'", key_pos);
            k = cur.integer();
        } else if (key == "n") {
            if (n) throw ParseError("duplicate key 'n'", key_pos);
            n = cur.integer();
        } else {
            throw ParseError("unknown key '" + key + "' for grass", key_pos);
        }
    }
    if (!k || !n) cur.fail("grass requires k=<int> n=<int>");
    std::size_t at = cur.pos;
    try {
        return SpecNode{GrassNode{GrassmannianSpec::normalized(*k, *n)}};
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), at);
    }
}

SpecNode parse_node(Cursor& cur) {
    cur.skip_ws();
    std::size_t at = cur.pos;
    std::string kind = cur.word();
    if (kind == "ci") return parse_ci(cur);
    if (kind == "grass") return parse_grass(cur);
    if (kind == "product") {
        cur.skip_ws();
        cur.expect('(');
        auto left = std::make_shared<const SpecNode>(parse_node(cur));
        cur.skip_ws();
        cur.expect(')');
        cur.skip_ws();
        cur.expect('(');
        auto right = std::make_shared<const SpecNode>(parse_node(cur));
        cur.skip_ws();
        cur.expect(')');
        return SpecNode{ProductNode{std::move(left), std::move(right)}};
    }
    if (kind == "bundle") {
        cur.skip_ws();
        std::size_t key_pos = cur.pos;
        if (cur.word() != "base") throw ParseError("bundle requires base=(<spec>)", key_pos);
        cur.expect('=');
        cur.expect('(');
        auto base = std::make_shared<const SpecNode>(parse_node(cur));
        cur.skip_ws();
        cur.expect(')');
        cur.skip_ws();
        key_pos = cur.pos;
        if (cur.word() != "c1L") throw ParseError("bundle requires c1L=<int>", key_pos);
        cur.expect('=');
        int c1l = cur.integer();
        return SpecNode{BundleNode{std::move(base), c1l}};
    }
    throw ParseError("unknown space kind '" + kind + "'", at);
}

} // namespace

SpecNode parse_spec(const std::string& text) {
    Cursor cur{text};
    SpecNode node = parse_node(cur);
    cur.skip_ws();
    if (!cur.eof()) cur.fail("trailing input");
    return node;
}

std::string canonical_text(const SpecNode& node) {
    struct Renderer {
        std::string operator()(const CiNode& ci) const {
            const auto& s = ci.spec;
            std::string out = "ci n=" + std::to_string(s.ambient_dim());
            bool trivial = std::all_of(s.weights.begin(), s.weights.end(),
                                       [](int w) { return w == 1; });
            if (!trivial) {
                out += " w=";
                for (std::size_t i = 0; i < s.weights.size(); ++i)
                    out += (i ? "," : "") + std::to_string(s.weights[i]);
            }
            if (!s.degrees.empty()) {
                out += " d=";
                for (std::size_t i = 0; i < s.degrees.size(); ++i)
                    out += (i ? "," : "") + std::to_string(s.degrees[i]);
            }
            return out;
        }
        std::string operator()(const GrassNode& g) const {
            return "grass k=" + std::to_string(g.spec.k) + " n=" + std::to_string(g.spec.n);
        }
        std::string operator()(const ProductNode& p) const {
            return "product (" + canonical_text(*p.left) + ") (" + canonical_text(*p.right) + ")";
        }
        std::string operator()(const BundleNode& b) const {
            return "bundle base=(" + canonical_text(*b.base) + ") c1L=" + std::to_string(b.c1l);
        }
    };
    return std::visit(Renderer{}, node.node);
}

Space build_space(const SpecNode& node) {
    struct Builder {
        Space operator()(const CiNode& ci) const { return make_complete_intersection(ci.spec); }
        Space operator()(const GrassNode& g) const { return make_grassmannian(g.spec); }
        Space operator()(const ProductNode& p) const {
            return make_product(build_space(*p.left), build_space(*p.right));
        }
        Space operator()(const BundleNode& b) const {
            Space base = build_space(*b.base);
            if (base.picard_generators.empty())
                throw PreconditionError("bundle base has no Picard generator");
            GradedClass c1L = base.picard_generators[0] * Rational(b.c1l);
            return make_p1_bundle(base, c1L);
        }
    };
    return std::visit(Builder{}, node.node);
}

std::optional<bool> oracle_two_fano(const SpecNode& node) {
    struct Oracle {
        std::optional<bool> operator()(const CiNode& ci) const {
            return oracle_ci_two_fano(ci.spec);
        }
        std::optional<bool> operator()(const GrassNode& g) const {
            return oracle_grassmannian_two_fano(g.spec);
        }
        std::optional<bool> operator()(const ProductNode& p) const {
            // closure statement: a product of two 2-Fano factors is 2-Fano
            bool left = classify(build_space(*p.left)).is_two_fano;
            bool right = classify(build_space(*p.right)).is_two_fano;
            if (left && right) return true;
            return std::nullopt;
        }
        std::optional<bool> operator()(const BundleNode& b) const {
            Space base = build_space(*b.base);
            GradedClass c1L = base.picard_generators[0] * Rational(b.c1l);
            return oracle_bundle_two_fano(base, c1L);
        }
    };
    return std::visit(Oracle{}, node.node);
}

} // namespace fano

#include "spanlab/mso.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spanlab {

namespace {

constexpr int kCheckMaxN = 8;
constexpr int kCheckMaxSets = 7;

std::string window_exclusions(const std::string& var, int i, int width, int k) {
    // (not (in var Vj)) for every j within distance width-1 of i, clipped.
    std::string out;
    for (int j = std::max(0, i - width + 1); j <= std::min(k, i + width - 1); ++j)
        out += " (not (in " + var + " V" + std::to_string(j) + "))";
    return out;
}

std::string dist2_body(const std::string& a, const std::string& b, const std::string& mid) {
    return "(and (neq " + a + " " + b + ") (not (adj " + a + " " + b + ")) (exists-vertex " +
           mid + " (and (adj " + a + " " + mid + ") (adj " + mid + " " + b + "))))";
}

std::string gap_conjunct(const std::string& guard, int width, int k) {
    // forall u,v: guard(u,v) -> some class i holds u with v excluded from the
    // width window around i.
    std::string alts;
    for (int i = 0; i <= k; ++i)
        alts += " (and (in u V" + std::to_string(i) + ")" + window_exclusions("v", i, width, k) +
                ")";
    return "(forall-vertex u (forall-vertex v (or (not " + guard + ") (or" + alts + "))))";
}

} // namespace

std::string emit_dist2() { return dist2_body("u", "w", "v"); }

std::string emit_phi(int k, PqParams params) {
    if (k < 0) throw ContractError("emit_phi: k must be >= 0");
    validate_params(params);

    std::string partition = "(forall-vertex v (or";
    for (int i = 0; i <= k; ++i) {
        partition += " (and (in v V" + std::to_string(i) + ")";
        for (int j = 0; j <= k; ++j)
            if (j != i) partition += " (not (in v V" + std::to_string(j) + "))";
        partition += ")";
    }
    partition += "))";

    std::string body = "(and " + partition + " " + gap_conjunct("(adj u v)", params.p, k) +
                       " " + gap_conjunct(dist2_body("u", "v", "m"), params.q, k) + ")";
    for (int i = k; i >= 0; --i)
        body = "(exists-set V" + std::to_string(i) + " " + body + ")";
    return body;
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t at = 0;
    MsoFormula out;

    explicit Parser(const std::string& t) : text(t) { out.nodes.emplace_back(); }

    void skip_ws() {
        while (at < text.size() && (text[at] == ' ' || text[at] == '\n' || text[at] == '\t'))
            ++at;
    }

    std::string symbol() {
        std::size_t start = at;
        while (at < text.size() && text[at] != ' ' && text[at] != '(' && text[at] != ')' &&
               text[at] != '\n' && text[at] != '\t')
            ++at;
        if (at == start) throw ContractError("mso parse: expected a symbol at offset " +
                                             std::to_string(at));
        return text.substr(start, at - start);
    }

    int parse() {
        skip_ws();
        if (at >= text.size() || text[at] != '(')
            throw ContractError("mso parse: expected '(' at offset " + std::to_string(at));
        ++at;
        skip_ws();
        std::string head = symbol();
        MsoNode node;
        using K = MsoNode::Kind;
        if (head == "and") node.kind = K::And;
        else if (head == "or") node.kind = K::Or;
        else if (head == "not") node.kind = K::Not;
        else if (head == "exists-vertex") node.kind = K::ExistsVertex;
        else if (head == "forall-vertex") node.kind = K::ForallVertex;
        else if (head == "exists-set") node.kind = K::ExistsSet;
        else if (head == "in") node.kind = K::In;
        else if (head == "adj") node.kind = K::Adj;
        else if (head == "neq") node.kind = K::Neq;
        else throw ContractError("mso parse: unknown operator '" + head + "'");

        if (node.kind == K::In || node.kind == K::Adj || node.kind == K::Neq) {
            skip_ws();
            node.terms.push_back(symbol());
            skip_ws();
            node.terms.push_back(symbol());
        } else if (node.kind == K::ExistsVertex || node.kind == K::ForallVertex ||
                   node.kind == K::ExistsSet) {
            skip_ws();
            node.var = symbol();
            node.children.push_back(parse());
        } else {
            while (true) {
                skip_ws();
                if (at < text.size() && text[at] == ')') break;
                node.children.push_back(parse());
            }
            if (node.kind == K::Not && node.children.size() != 1)
                throw ContractError("mso parse: 'not' takes exactly one argument");
        }
        skip_ws();
        if (at >= text.size() || text[at] != ')')
            throw ContractError("mso parse: expected ')' at offset " + std::to_string(at));
        ++at;
        out.nodes.push_back(std::move(node));
        return static_cast<int>(out.nodes.size()) - 1;
    }
};

enum class Tri { False, True, Unknown };

Tri tri_not(Tri t) {
    if (t == Tri::Unknown) return Tri::Unknown;
    return t == Tri::True ? Tri::False : Tri::True;
}

struct Eval {
    const MsoFormula& f;
    const Graph& g;
    const std::map<std::string, int>& setIndex; // set name -> class id
    const std::vector<int>& classOf;            // vertex -> class id or -1
    std::map<std::string, int> env;             // vertex name -> vertex

    int vertex(const std::string& name) const {
        auto it = env.find(name);
        if (it == env.end())
            throw ContractError("mso eval: unbound vertex variable '" + name + "'");
        return it->second;
    }

    Tri eval(int id) {
        const MsoNode& node = f.nodes[id];
        using K = MsoNode::Kind;
        switch (node.kind) {
        case K::And: {
            bool unknown = false;
            for (int c : node.children) {
                Tri t = eval(c);
                if (t == Tri::False) return Tri::False;
                if (t == Tri::Unknown) unknown = true;
            }
            return unknown ? Tri::Unknown : Tri::True;
        }
        case K::Or: {
            bool unknown = false;
            for (int c : node.children) {
                Tri t = eval(c);
                if (t == Tri::True) return Tri::True;
                if (t == Tri::Unknown) unknown = true;
            }
            return unknown ? Tri::Unknown : Tri::False;
        }
        case K::Not:
            return tri_not(eval(node.children[0]));
        case K::ForallVertex: {
            bool unknown = false;
            for (int v = 0; v < g.n; ++v) {
                env[node.var] = v;
                Tri t = eval(node.children[0]);
                if (t == Tri::False) { env.erase(node.var); return Tri::False; }
                if (t == Tri::Unknown) unknown = true;
            }
            env.erase(node.var);
            return unknown ? Tri::Unknown : Tri::True;
        }
        case K::ExistsVertex: {
            bool unknown = false;
            for (int v = 0; v < g.n; ++v) {
                env[node.var] = v;
                Tri t = eval(node.children[0]);
                if (t == Tri::True) { env.erase(node.var); return Tri::True; }
                if (t == Tri::Unknown) unknown = true;
            }
            env.erase(node.var);
            return unknown ? Tri::Unknown : Tri::False;
        }
        case K::ExistsSet:
            throw ContractError("mso eval: set quantifier below the top level");
        case K::In: {
            int v = vertex(node.terms[0]);
            auto it = setIndex.find(node.terms[1]);
            if (it == setIndex.end())
                throw ContractError("mso eval: unknown set '" + node.terms[1] + "'");
            if (classOf[v] < 0) return Tri::Unknown;
            return classOf[v] == it->second ? Tri::True : Tri::False;
        }
        case K::Adj:
            return g.has_edge(vertex(node.terms[0]), vertex(node.terms[1])) ? Tri::True
                                                                            : Tri::False;
        case K::Neq:
            return vertex(node.terms[0]) != vertex(node.terms[1]) ? Tri::True : Tri::False;
        }
        throw Error("mso eval: unreachable");
    }
};

bool check_rec(Eval& ev, std::vector<int>& classOf, int v, int numClasses, int body) {
    Tri t = ev.eval(body);
    if (t == Tri::False) return false;
    if (t == Tri::True) return true;
    if (v == static_cast<int>(classOf.size()))
        throw Error("naive_model_check: internal error, full assignment left unknowns");
    for (int c = 0; c < numClasses; ++c) {
        classOf[v] = c;
        if (check_rec(ev, classOf, v + 1, numClasses, body)) return true;
    }
    classOf[v] = -1;
    return false;
}

} // namespace

MsoFormula parse_formula(const std::string& text) {
    Parser p(text);
    int root = p.parse();
    p.skip_ws();
    if (p.at != text.size())
        throw ContractError("mso parse: trailing input after the formula");
    p.out.root = root;
    return std::move(p.out);
}

bool naive_model_check(const Graph& g, const std::string& formula) {
    if (g.n > kCheckMaxN)
        throw Refusal("naive_model_check: graph larger than " + std::to_string(kCheckMaxN));
    MsoFormula f = parse_formula(formula);

    std::map<std::string, int> setIndex;
    int body = f.root;
    while (f.nodes[body].kind == MsoNode::Kind::ExistsSet) {
        const MsoNode& node = f.nodes[body];
        if (setIndex.count(node.var))
            throw ContractError("naive_model_check: duplicate set variable '" + node.var + "'");
        setIndex[node.var] = static_cast<int>(setIndex.size());
        body = node.children[0];
    }
    if (setIndex.empty())
        throw ContractError("naive_model_check: no set quantifiers; closed formulas only");
    if (static_cast<int>(setIndex.size()) > kCheckMaxSets)
        throw Refusal("naive_model_check: more than " + std::to_string(kCheckMaxSets) +
                      " set variables");

    // The body's partition conjunct means every satisfying set assignment is
    // a class map, so enumerating class maps loses nothing.
    std::vector<int> classOf(g.n, -1);
    Eval ev{f, g, setIndex, classOf, {}};
    return check_rec(ev, classOf, 0, static_cast<int>(setIndex.size()), body);
}

bool naive_check_pair(const Graph& g, const std::string& formula, int u, int w) {
    if (u < 0 || u >= g.n || w < 0 || w >= g.n)
        throw ContractError("naive_check_pair: vertex out of range");
    MsoFormula f = parse_formula(formula);
    std::map<std::string, int> noSets;
    std::vector<int> noClasses(g.n, -1);
    Eval ev{f, g, noSets, noClasses, {{"u", u}, {"w", w}}};
    Tri t = ev.eval(f.root);
    if (t == Tri::Unknown)
        throw ContractError("naive_check_pair: formula mentions sets");
    return t == Tri::True;
}

} // namespace spanlab

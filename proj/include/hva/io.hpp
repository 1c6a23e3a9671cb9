#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "counter.hpp"
#include "engine.hpp"
#include "free_group.hpp"

namespace hva {

using Json = nlohmann::ordered_json;

namespace detail {

/// Walks a JSON document keeping the JSON pointer of the current node for error messages.
class Node {
public:
    Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const Json& json() const { return j_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, path_.empty() ? "/" : path_); }

    Node operator[](std::string_view key) const {
        if (!j_.is_object())
            fail("expected an object");
        auto it = j_.find(std::string(key));
        if (it == j_.end())
            fail("missing key \"" + std::string(key) + "\"");
        return Node(*it, path_ + "/" + std::string(key));
    }

    bool has(std::string_view key) const { return j_.is_object() && j_.contains(std::string(key)); }

    std::vector<Node> items() const {
        if (!j_.is_array())
            fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_.size(); ++i)
            out.emplace_back(j_[i], path_ + "/" + std::to_string(i));
        return out;
    }

    std::string str() const {
        if (!j_.is_string())
            fail("expected a string");
        return j_.get<std::string>();
    }

    bool boolean() const {
        if (!j_.is_boolean())
            fail("expected true or false");
        return j_.get<bool>();
    }

    std::int64_t integer() const {
        if (!j_.is_number_integer())
            fail("expected an integer");
        return j_.get<std::int64_t>();
    }

    Rational rational() const {
        if (j_.is_number_integer())
            return Rational(j_.get<std::int64_t>());
        if (!j_.is_string())
            fail("expected a rational string such as \"3\" or \"-1/2\"");
        try {
            return Rational::parse(j_.get<std::string>());
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }

    Symbol symbol() const {
        Word w = utf8_decode(str());
        if (w.size() != 1)
            fail("a symbol must be exactly one character");
        return w[0];
    }

    std::optional<Symbol> symbol_or_epsilon() const {
        if (j_.is_null())
            return std::nullopt;
        return symbol();
    }

    std::vector<std::string> strings() const {
        std::vector<std::string> out;
        for (const auto& n : items())
            out.push_back(n.str());
        return out;
    }

    std::vector<Symbol> alphabet() const {
        std::vector<Symbol> out;
        for (const auto& n : items())
            out.push_back(n.symbol());
        return out;
    }

private:
    const Json& j_;
    std::string path_;
};

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::string msg = e.what();
        if (auto p = msg.find("]: "); p != std::string::npos)
            msg = msg.substr(p + 3);
        throw ParseError("JSON syntax error: " + msg, "byte " + std::to_string(e.byte));
    }
}

inline StateId lookup_state(const std::vector<std::string>& states, const Node& n) {
    const std::string name = n.str();
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end())
        n.fail("unknown state \"" + name + "\"");
    return static_cast<StateId>(it - states.begin());
}

inline std::vector<StateId> lookup_states(const std::vector<std::string>& states, const Node& n) {
    std::vector<StateId> out;
    for (const auto& item : n.items())
        out.push_back(lookup_state(states, item));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<Rational> rational_row(const Node& n) {
    std::vector<Rational> out;
    for (const auto& x : n.items())
        out.push_back(x.rational());
    return out;
}

inline Json alphabet_json(const std::vector<Symbol>& alphabet) {
    Json out = Json::array();
    for (Symbol s : alphabet)
        out.push_back(utf8_encode(s));
    return out;
}

inline Json accept_json(const std::vector<std::string>& states, const std::vector<StateId>& accept) {
    Json out = Json::array();
    for (StateId q : accept)
        out.push_back(states[q]);
    return out;
}

inline Json symbol_json(const std::optional<Symbol>& s) { return s ? Json(utf8_encode(*s)) : Json(nullptr); }

inline Json vector_json(const QVector& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(x.to_string());
    return out;
}

inline Json matrix_json(const QMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j)
            row.push_back(m(i, j).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

inline std::string dump(const Json& j) { return j.dump(2, ' ', false) + "\n"; }

} // namespace detail

// ---------------------------------------------------------------------------
// HVA documents

inline HvaMachine machine_from_json(const Json& doc) {
    detail::Node root(doc, "");
    HvaMachine m;
    m.name = root["name"].str();

    auto mode = root["mode"];
    const std::string head = mode["head"].str(), control = mode["control"].str();
    if (head == "realtime")
        m.mode.head = Head::realtime;
    else if (head == "oneway")
        m.mode.head = Head::oneway;
    else
        mode["head"].fail("head must be \"realtime\" or \"oneway\"");
    if (control == "deterministic")
        m.mode.control = Control::deterministic;
    else if (control == "nondeterministic")
        m.mode.control = Control::nondeterministic;
    else
        mode["control"].fail("control must be \"deterministic\" or \"nondeterministic\"");
    m.mode.blind = mode["blind"].boolean();

    const auto k = root["dimension"].integer();
    if (k < 1)
        root["dimension"].fail("dimension must be at least 1");
    m.dimension = static_cast<std::size_t>(k);
    m.alphabet = root["alphabet"].alphabet();
    m.states = root["states"].strings();
    m.start = detail::lookup_state(m.states, root["start"]);
    m.accept = detail::lookup_states(m.states, root["accept"]);

    auto iv = root["initial_vector"];
    auto entries = detail::rational_row(iv);
    if (entries.size() != m.dimension)
        throw DimensionError(iv.path() + ": initial vector has " + std::to_string(entries.size()) + " entries, dimension is " +
                             std::to_string(m.dimension));
    m.initial_vector = QVector(std::move(entries));

    for (const auto& tn : root["transitions"].items()) {
        Transition t;
        t.from = detail::lookup_state(m.states, tn["from"]);
        t.to = detail::lookup_state(m.states, tn["to"]);
        t.symbol = tn["symbol"].symbol_or_epsilon();
        const std::string g = tn["guard"].str();
        if (g == "eq")
            t.guard = Guard::eq;
        else if (g == "neq")
            t.guard = Guard::neq;
        else if (g == "any")
            t.guard = Guard::any;
        else
            tn["guard"].fail("guard must be \"eq\", \"neq\" or \"any\"");
        auto rows = tn["matrix"].items();
        if (rows.size() != m.dimension)
            throw DimensionError(tn["matrix"].path() + ": matrix has " + std::to_string(rows.size()) +
                                 " rows, dimension is " + std::to_string(m.dimension));
        QMatrix mat(m.dimension);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto row = detail::rational_row(rows[i]);
            if (row.size() != m.dimension)
                throw DimensionError(rows[i].path() + ": matrix row has " + std::to_string(row.size()) +
                                     " entries, dimension is " + std::to_string(m.dimension));
            for (std::size_t j = 0; j < row.size(); ++j)
                mat(i, j) = row[j];
        }
        t.matrix = std::move(mat);
        m.transitions.push_back(std::move(t));
    }
    return validated(std::move(m));
}

/// Parses and validates a machine document. Throws ParseError (syntax or schema,
/// located by byte offset or JSON pointer), DimensionError or ValidationError.
inline HvaMachine parse_machine(std::string_view text) { return machine_from_json(detail::parse_json(text)); }

inline Json machine_to_json(const HvaMachine& m) {
    Json doc;
    doc["name"] = m.name;
    doc["mode"] = Json{{"head", m.mode.head == Head::realtime ? "realtime" : "oneway"},
                       {"control", m.mode.control == Control::deterministic ? "deterministic" : "nondeterministic"},
                       {"blind", m.mode.blind}};
    doc["dimension"] = m.dimension;
    doc["alphabet"] = detail::alphabet_json(m.alphabet);
    doc["states"] = m.states;
    doc["start"] = m.states[m.start];
    doc["accept"] = detail::accept_json(m.states, m.accept);
    doc["initial_vector"] = detail::vector_json(m.initial_vector);
    Json ts = Json::array();
    for (const auto& t : m.transitions) {
        Json tj;
        tj["from"] = m.states[t.from];
        tj["symbol"] = detail::symbol_json(t.symbol);
        tj["guard"] = to_string(t.guard);
        tj["to"] = m.states[t.to];
        tj["matrix"] = detail::matrix_json(t.matrix);
        ts.push_back(std::move(tj));
    }
    doc["transitions"] = std::move(ts);
    return doc;
}

inline std::string serialize_machine(const HvaMachine& m) { return detail::dump(machine_to_json(m)); }

// ---------------------------------------------------------------------------
// EFA documents

inline GroupWord group_word_from(const detail::Node& n) {
    try {
        return GroupWord::reduce(n.str());
    } catch (const ParseError& e) {
        n.fail(e.what());
    }
}

inline EfaMachine efa_from_json(const Json& doc) {
    detail::Node root(doc, "");
    EfaMachine e;
    e.name = root["name"].str();
    const std::string group = root["group"].str();
    if (group == "F2")
        e.group = GroupKind::F2;
    else if (group == "F2xF2")
        e.group = GroupKind::F2xF2;
    else
        root["group"].fail("group must be \"F2\" or \"F2xF2\"");
    e.alphabet = root["alphabet"].alphabet();
    e.states = root["states"].strings();
    e.start = detail::lookup_state(e.states, root["start"]);
    e.accept = detail::lookup_states(e.states, root["accept"]);
    for (const auto& tn : root["transitions"].items()) {
        EfaTransition t;
        t.from = detail::lookup_state(e.states, tn["from"]);
        t.to = detail::lookup_state(e.states, tn["to"]);
        t.symbol = tn["symbol"].symbol_or_epsilon();
        auto el = tn["element"];
        if (e.group == GroupKind::F2) {
            t.element = group_word_from(el);
        } else {
            if (!el.json().is_object())
                el.fail("an F2xF2 element is an object {\"left\": ..., \"right\": ...}");
            t.element = GroupPair{group_word_from(el["left"]), group_word_from(el["right"])};
        }
        e.transitions.push_back(std::move(t));
    }
    if (auto problems = validate_efa(e); !problems.empty())
        throw ParseError(problems.front(), "/");
    return e;
}

inline EfaMachine parse_efa(std::string_view text) { return efa_from_json(detail::parse_json(text)); }

inline Json efa_to_json(const EfaMachine& e) {
    Json doc;
    doc["name"] = e.name;
    doc["group"] = e.group == GroupKind::F2 ? "F2" : "F2xF2";
    doc["alphabet"] = detail::alphabet_json(e.alphabet);
    doc["states"] = e.states;
    doc["start"] = e.states[e.start];
    doc["accept"] = detail::accept_json(e.states, e.accept);
    Json ts = Json::array();
    for (const auto& t : e.transitions) {
        Json tj;
        tj["from"] = e.states[t.from];
        tj["symbol"] = detail::symbol_json(t.symbol);
        tj["to"] = e.states[t.to];
        if (auto* w = std::get_if<GroupWord>(&t.element))
            tj["element"] = w->letters();
        else {
            const auto& p = std::get<GroupPair>(t.element);
            tj["element"] = Json{{"left", p.left.letters()}, {"right", p.right.letters()}};
        }
        ts.push_back(std::move(tj));
    }
    doc["transitions"] = std::move(ts);
    return doc;
}

inline std::string serialize_efa(const EfaMachine& e) { return detail::dump(efa_to_json(e)); }

// ---------------------------------------------------------------------------
// Counter machine documents. Zero patterns are strings over '=' (counter is
// zero) and '≠' (counter is nonzero), one character per counter.

inline CounterMachine counter_from_json(const Json& doc) {
    detail::Node root(doc, "");
    CounterMachine m;
    m.name = root["name"].str();
    m.alphabet = root["alphabet"].alphabet();
    m.states = root["states"].strings();
    m.start = detail::lookup_state(m.states, root["start"]);
    m.accept = detail::lookup_states(m.states, root["accept"]);
    const auto k = root["counters"].integer();
    if (k < 1)
        root["counters"].fail("at least one counter is required");
    m.counters = static_cast<std::size_t>(k);
    m.blind = root["blind"].boolean();
    m.accept_on_zero = root.has("accept_on_zero") ? root["accept_on_zero"].boolean() : true;
    for (const auto& tn : root["transitions"].items()) {
        CounterTransition t;
        t.from = detail::lookup_state(m.states, tn["from"]);
        t.to = detail::lookup_state(m.states, tn["to"]);
        t.symbol = tn["symbol"].symbol();
        if (tn.has("pattern")) {
            std::vector<bool> zeros;
            for (Symbol c : utf8_decode(tn["pattern"].str())) {
                if (c == U'=')
                    zeros.push_back(true);
                else if (c == U'≠')
                    zeros.push_back(false);
                else
                    tn["pattern"].fail("pattern characters must be '=' or '≠'");
            }
            t.zero_pattern = std::move(zeros);
        }
        for (const auto& d : tn["increments"].items())
            t.increments.push_back(static_cast<int>(d.integer()));
        m.transitions.push_back(std::move(t));
    }
    if (auto problems = validate_counter(m); !problems.empty())
        throw ParseError(problems.front(), "/");
    return m;
}

inline CounterMachine parse_counter(std::string_view text) { return counter_from_json(detail::parse_json(text)); }

inline Json counter_to_json(const CounterMachine& m) {
    Json doc;
    doc["name"] = m.name;
    doc["alphabet"] = detail::alphabet_json(m.alphabet);
    doc["states"] = m.states;
    doc["start"] = m.states[m.start];
    doc["accept"] = detail::accept_json(m.states, m.accept);
    doc["counters"] = m.counters;
    doc["blind"] = m.blind;
    doc["accept_on_zero"] = m.accept_on_zero;
    Json ts = Json::array();
    for (const auto& t : m.transitions) {
        Json tj;
        tj["from"] = m.states[t.from];
        tj["symbol"] = utf8_encode(t.symbol);
        if (t.zero_pattern) {
            std::string p;
            for (bool z : *t.zero_pattern)
                p += z ? "=" : "≠";
            tj["pattern"] = p;
        }
        tj["to"] = m.states[t.to];
        tj["increments"] = t.increments;
        ts.push_back(std::move(tj));
    }
    doc["transitions"] = std::move(ts);
    return doc;
}

inline std::string serialize_counter(const CounterMachine& m) { return detail::dump(counter_to_json(m)); }

// ---------------------------------------------------------------------------
// DFA documents: the transition list must be total.

inline Dfa dfa_from_json(const Json& doc) {
    detail::Node root(doc, "");
    Dfa d;
    d.name = root["name"].str();
    d.alphabet = root["alphabet"].alphabet();
    d.states = root["states"].strings();
    d.start = detail::lookup_state(d.states, root["start"]);
    d.accept = detail::lookup_states(d.states, root["accept"]);
    constexpr StateId unset = static_cast<StateId>(-1);
    d.delta.assign(d.states.size(), std::vector<StateId>(d.alphabet.size(), unset));
    for (const auto& tn : root["transitions"].items()) {
        const StateId from = detail::lookup_state(d.states, tn["from"]);
        const Symbol s = tn["symbol"].symbol();
        auto idx = symbol_index(d.alphabet, s);
        if (!idx)
            tn["symbol"].fail("symbol outside the alphabet");
        if (d.delta[from][*idx] != unset)
            tn.fail("second transition on the same state and symbol");
        d.delta[from][*idx] = detail::lookup_state(d.states, tn["to"]);
    }
    for (StateId q = 0; q < d.states.size(); ++q)
        for (std::size_t s = 0; s < d.alphabet.size(); ++s)
            if (d.delta[q][s] == unset)
                root["transitions"].fail("no transition from \"" + d.states[q] + "\" on '" + utf8_encode(d.alphabet[s]) +
                                         "'; the DFA must be total");
    return d;
}

inline Dfa parse_dfa(std::string_view text) { return dfa_from_json(detail::parse_json(text)); }

inline Json dfa_to_json(const Dfa& d) {
    Json doc;
    doc["name"] = d.name;
    doc["alphabet"] = detail::alphabet_json(d.alphabet);
    doc["states"] = d.states;
    doc["start"] = d.states[d.start];
    doc["accept"] = detail::accept_json(d.states, d.accept);
    Json ts = Json::array();
    for (StateId q = 0; q < d.states.size(); ++q)
        for (std::size_t s = 0; s < d.alphabet.size(); ++s)
            ts.push_back(Json{{"from", d.states[q]}, {"symbol", utf8_encode(d.alphabet[s])}, {"to", d.states[d.delta[q][s]]}});
    doc["transitions"] = std::move(ts);
    return doc;
}

inline std::string serialize_dfa(const Dfa& d) { return detail::dump(dfa_to_json(d)); }

// ---------------------------------------------------------------------------

enum class DocumentKind { hva, efa, counter, dfa };

/// Tells the document formats apart by their distinguishing keys.
inline DocumentKind document_kind(const Json& doc) {
    if (!doc.is_object())
        throw ParseError("expected a JSON object", "/");
    if (doc.contains("group"))
        return DocumentKind::efa;
    if (doc.contains("counters"))
        return DocumentKind::counter;
    if (doc.contains("initial_vector"))
        return DocumentKind::hva;
    return DocumentKind::dfa;
}

/// JSON form of an accepting trace: one object per move.
inline Json trace_to_json(const HvaMachine& m, const std::vector<TraceStep>& trace) {
    Json out = Json::array();
    StateId from = m.start;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const Transition& t = m.transitions[trace[i].transition];
        out.push_back(Json{{"step", i + 1},
                           {"symbol", detail::symbol_json(t.symbol)},
                           {"from", m.states[from]},
                           {"to", m.states[t.to]},
                           {"guard", to_string(t.guard)},
                           {"vector_after", detail::vector_json(trace[i].after.vector)}});
        from = t.to;
    }
    return out;
}

/// "[2,3]" -> QVector. Entries are rational strings; blanks around them are ignored.
inline QVector parse_vector_text(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("vector must be written as [x1,...,xk]", "byte 0");
    body = body.substr(1, body.size() - 2);
    std::vector<Rational> entries;
    std::size_t offset = 1;
    while (true) {
        auto comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        if (item.empty())
            throw ParseError("empty vector entry", "byte " + std::to_string(offset));
        try {
            entries.push_back(Rational::parse(item));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), "byte " + std::to_string(offset));
        }
        if (comma == std::string_view::npos)
            break;
        offset += comma + 1;
        body.remove_prefix(comma + 1);
    }
    return QVector(std::move(entries));
}

} // namespace hva

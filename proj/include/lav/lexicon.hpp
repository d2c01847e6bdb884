#pragma once

// Lexicon: noun -> object type map with synonyms, synonym folding for
// verbs, and the grammar rules that map token patterns to plan templates.
// Loads from a plain-text rules file; the built-in default mirrors the
// instruction templates used by the generator.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lav/objects.hpp"
#include "lav/plan.hpp"

namespace lav {

struct GrammarRule {
    // Pattern tokens; "{obj}" and "{recep}" are noun slots, "{prep}" matches
    // "in" or "on". Everything else matches literally after folding.
    std::vector<std::string> pattern;
    // Plan template steps as Subtask:Target strings where Target may be a
    // slot name instead of a concrete type.
    std::vector<std::string> plan_template;
    int file_order = 0;

    // More literal tokens = more specific rule.
    int specificity() const { return static_cast<int>(pattern.size()); }
};

class Lexicon {
  public:
    std::map<std::string, ObjectType> nouns;    // surface noun -> type
    std::map<std::string, std::string> folds;   // synonym -> canonical token
    std::vector<GrammarRule> rules;

    std::optional<ObjectType> resolve_noun(const std::string& word) const {
        auto it = nouns.find(word);
        if (it == nouns.end()) return std::nullopt;
        return it->second;
    }

    std::string fold(const std::string& word) const {
        auto it = folds.find(word);
        return it == folds.end() ? word : it->second;
    }

    // Canonical surface form for a type (first noun registered for it).
    std::string noun_for(ObjectType t) const {
        for (const auto& [word, type] : nouns)
            if (type == t && folds.find(word) == folds.end()) return word;
        for (const auto& [word, type] : nouns)
            if (type == t) return word;
        return std::string(object_type_name(t));
    }

    std::vector<std::string> synonyms_for(ObjectType t) const {
        std::vector<std::string> out;
        for (const auto& [word, type] : nouns)
            if (type == t) out.push_back(word);
        return out;
    }
};

namespace detail {

inline void lexicon_add_line(Lexicon& lex, const std::string& line, int line_no) {
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind.empty() || kind[0] == '#') return;
    auto fail = [&](const std::string& why) -> void {
        throw std::runtime_error("lexicon line " + std::to_string(line_no) + ": " + why);
    };
    if (kind == "noun") {
        std::string word, type_name;
        ls >> word >> type_name;
        auto type = object_type_from_name(type_name);
        if (!type) fail("unknown type " + type_name);
        if (lex.nouns.count(word)) fail("duplicate noun " + word);
        lex.nouns[word] = *type;
    } else if (kind == "syn") {
        std::string from, to;
        ls >> from >> to;
        if (from.empty() || to.empty()) fail("syn needs two tokens");
        if (lex.folds.count(from)) fail("duplicate synonym " + from);
        lex.folds[from] = to;
        // A noun synonym also resolves as a noun for slot matching.
        auto it = lex.nouns.find(to);
        if (it != lex.nouns.end() && !lex.nouns.count(from)) lex.nouns[from] = it->second;
    } else if (kind == "rule") {
        GrammarRule rule;
        rule.file_order = static_cast<int>(lex.rules.size());
        std::string token;
        bool arrow = false;
        while (ls >> token) {
            if (token == "->") {
                arrow = true;
                continue;
            }
            (arrow ? rule.plan_template : rule.pattern).push_back(token);
        }
        if (!arrow || rule.pattern.empty() || rule.plan_template.empty())
            fail("rule needs 'pattern -> plan'");
        lex.rules.push_back(rule);
    } else {
        fail("unknown directive " + kind);
    }
}

} // namespace detail

inline Lexicon parse_lexicon(const std::string& text) {
    Lexicon lex;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) detail::lexicon_add_line(lex, line, ++line_no);
    if (lex.rules.empty()) throw std::runtime_error("lexicon has no grammar rules");
    for (ObjectType t : all_object_types()) {
        bool reachable = false;
        for (const auto& [word, type] : lex.nouns) reachable = reachable || type == t;
        if (!reachable)
            throw std::runtime_error("lexicon has no noun for type " +
                                     std::string(object_type_name(t)));
    }
    return lex;
}

inline const std::string& default_lexicon_text() {
    static const std::string text = R"(# nouns: surface form -> object type
noun bowl Bowl
noun cup Cup
noun apple Apple
noun potato Potato
noun knife Knife
noun sink Sink
noun fridge Fridge
noun microwave Microwave
noun cabinet Cabinet
noun table Table
noun lamp Lamp
# noun synonyms fold onto canonical nouns
syn mug cup
syn spud potato
syn blade knife
syn basin sink
syn refrigerator fridge
syn cupboard cabinet
syn counter table
syn light lamp
# verb and adjective synonyms
syn place put
syn washed clean
syn wash clean
syn rinse clean
syn warm heat
syn chill cool
syn cut slice
syn switch turn
syn into in
syn onto on
# grammar rules: token pattern -> plan template
rule put clean {obj} {prep} {recep} -> PickUp:{obj} Clean:Sink Place:{recep}
rule heat {obj} and put {prep} {recep} -> PickUp:{obj} Heat:Microwave Place:{recep}
rule cool {obj} and put {prep} {recep} -> PickUp:{obj} Cool:Fridge Place:{recep}
rule slice {obj} and put {prep} {recep} -> PickUp:Knife Slice:{obj} Place:Sink PickUp:{obj} Place:{recep}
rule put {obj} {prep} {recep} -> PickUp:{obj} Place:{recep}
rule turn on {obj} -> Toggle:{obj}
)";
    return text;
}

inline const Lexicon& default_lexicon() {
    static const Lexicon lex = parse_lexicon(default_lexicon_text());
    return lex;
}

} // namespace lav

#pragma once

// Language module: instruction text -> candidate plans. Pattern matching
// over folded tokens; plan normalization; the two scene-informed
// selection passes (visibility filter and value ranking).

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lav/geometry.hpp"
#include "lav/lexicon.hpp"
#include "lav/macros.hpp"
#include "lav/plan.hpp"
#include "lav/taskgen.hpp"
#include "lav/vision.hpp"

namespace lav {

enum class ParseError : std::uint8_t { None, NoParse, UnknownObject };

struct ParseResult {
    std::vector<Plan> candidates; // ordered by rule specificity
    ParseError error = ParseError::None;
    std::string offending_word;

    bool ok() const { return error == ParseError::None; }
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& text, const Lexicon& lexicon) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.empty()) return;
        std::string folded = lexicon.fold(current);
        if (folded != "a" && folded != "an" && folded != "the" && folded != "it")
            tokens.push_back(folded);
        current.clear();
    };
    for (char ch : text) {
        if (std::isalnum(static_cast<unsigned char>(ch)))
            current += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        else
            flush();
    }
    flush();
    return tokens;
}

struct RuleMatch {
    const GrammarRule* rule = nullptr;
    std::size_t begin = 0;
    std::size_t end = 0;
    Plan plan;
};

inline bool is_noun_slot(const std::string& token) {
    return token == "{obj}" || token == "{recep}";
}

// Attempts to match `rule` at `start`. On a noun-slot failure reports the
// offending word and how many tokens matched before it.
inline bool match_rule_at(const GrammarRule& rule, const std::vector<std::string>& tokens,
                          std::size_t start, Plan& out, std::string& unknown_word,
                          std::size_t& progress, const Lexicon& lexicon) {
    if (start + rule.pattern.size() > tokens.size()) return false;
    std::vector<std::pair<std::string, ObjectType>> bindings;
    for (std::size_t i = 0; i < rule.pattern.size(); ++i) {
        const std::string& pat = rule.pattern[i];
        const std::string& tok = tokens[start + i];
        if (is_noun_slot(pat)) {
            auto type = lexicon.resolve_noun(tok);
            if (!type) {
                if (i > progress) {
                    progress = i;
                    unknown_word = tok;
                }
                return false;
            }
            bindings.emplace_back(pat, *type);
        } else if (pat == "{prep}") {
            if (tok != "in" && tok != "on") return false;
        } else if (pat != tok) {
            return false;
        }
    }

    Plan plan;
    for (const std::string& step : rule.plan_template) {
        auto colon = step.find(':');
        auto sub = subtask_from_name(step.substr(0, colon));
        std::string target_name = step.substr(colon + 1);
        std::optional<ObjectType> target = object_type_from_name(target_name);
        if (!target) {
            for (const auto& [slot, type] : bindings)
                if (slot == target_name) target = type;
        }
        if (!sub || !target) return false;
        plan.steps.push_back({*sub, *target});
    }
    out = std::move(plan);
    return true;
}

} // namespace detail

// Matches the instruction against the grammar. Returns every maximal match
// (matches whose token window is contained in another's are dropped),
// ordered by rule specificity. Tokens outside any matched window are
// ignored, which is what makes distractor clauses harmless.
inline ParseResult parse_instruction(const std::string& text, const Lexicon& lexicon) {
    ParseResult result;
    std::vector<std::string> tokens = detail::tokenize(text, lexicon);
    if (tokens.empty()) {
        result.error = ParseError::NoParse;
        return result;
    }

    std::vector<detail::RuleMatch> matches;
    std::string best_unknown;
    std::size_t best_progress = 0;
    for (const GrammarRule& rule : lexicon.rules) {
        for (std::size_t start = 0; start + rule.pattern.size() <= tokens.size(); ++start) {
            Plan plan;
            std::size_t progress = best_progress;
            std::string unknown;
            if (detail::match_rule_at(rule, tokens, start, plan, unknown, progress, lexicon)) {
                matches.push_back(
                    {&rule, start, start + rule.pattern.size(), std::move(plan)});
            } else if (progress > best_progress ||
                       (best_unknown.empty() && !unknown.empty())) {
                best_progress = progress;
                best_unknown = unknown;
            }
        }
    }

    if (matches.empty()) {
        if (!best_unknown.empty()) {
            result.error = ParseError::UnknownObject;
            result.offending_word = best_unknown;
        } else {
            result.error = ParseError::NoParse;
        }
        return result;
    }

    // Keep maximal windows only.
    std::vector<detail::RuleMatch> maximal;
    for (const auto& m : matches) {
        bool contained = false;
        for (const auto& other : matches) {
            if (&other == &m) continue;
            bool inside = other.begin <= m.begin && m.end <= other.end &&
                          (other.end - other.begin) > (m.end - m.begin);
            if (inside) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(m);
    }

    std::stable_sort(maximal.begin(), maximal.end(),
                     [](const detail::RuleMatch& a, const detail::RuleMatch& b) {
                         if (a.rule->specificity() != b.rule->specificity())
                             return a.rule->specificity() > b.rule->specificity();
                         if (a.begin != b.begin) return a.begin < b.begin;
                         return a.rule->file_order < b.rule->file_order;
                     });
    for (auto& m : maximal) {
        if (std::find(result.candidates.begin(), result.candidates.end(), m.plan) ==
            result.candidates.end())
            result.candidates.push_back(std::move(m.plan));
    }
    return result;
}

inline ParseResult parse_instruction(const Instruction& instr, const Lexicon& lexicon) {
    return parse_instruction(instr.text, lexicon);
}

// Inserts implied prerequisites and rewrites appliance-subtask targets:
// (Clean, Bowl) becomes (PickUp, Bowl), (Clean, Sink). Idempotent and
// order-preserving for the original steps.
inline Plan normalize_plan(const Plan& plan) {
    Plan out;
    std::optional<ObjectType> held;
    for (const PlanStep& step : plan.steps) {
        switch (step.subtask) {
            case Subtask::PickUp:
                held = step.object;
                out.steps.push_back(step);
                break;
            case Subtask::Place:
                out.steps.push_back(step);
                held.reset();
                break;
            case Subtask::Clean:
            case Subtask::Heat:
            case Subtask::Cool: {
                ObjectType appliance = *subtask_appliance(step.subtask);
                if (step.object != appliance) {
                    // Raw form names the manipulated object.
                    if (held != step.object) {
                        out.steps.push_back({Subtask::PickUp, step.object});
                        held = step.object;
                    }
                    out.steps.push_back({step.subtask, appliance});
                } else {
                    out.steps.push_back(step);
                }
                break;
            }
            case Subtask::Slice:
                if (held != ObjectType::Knife) {
                    out.steps.push_back({Subtask::PickUp, ObjectType::Knife});
                    held = ObjectType::Knife;
                }
                out.steps.push_back(step);
                break;
            case Subtask::Toggle:
                out.steps.push_back(step);
                break;
        }
    }
    return out;
}

// Highest-ranked candidate whose referenced object types have all been
// observed so far; falls back to the top-ranked candidate.
inline Plan disambiguate(const std::vector<Plan>& candidates, const PerceptionFrame& frame) {
    for (const Plan& plan : candidates) {
        bool all_seen = true;
        for (const PlanStep& step : plan.steps) {
            if (!mask_contains(frame.observed_types, step.object)) {
                all_seen = false;
                break;
            }
        }
        if (all_seen) return plan;
    }
    return candidates.front();
}

struct PlanValue {
    double cost = 0.0;
    bool infeasible = false;
};

// Estimated completion cost: per step, grid distance to the nearest ray
// sighting of the step's object type (or `unobserved_cost` when the type
// has no sighting in the frame) plus the fixed macro length.
inline PlanValue plan_value(const Plan& plan, const PerceptionFrame& frame,
                            const AgentState& agent, double unobserved_cost) {
    if (plan.empty()) return {0.0, true};
    PlanValue value;
    for (const PlanStep& step : plan.steps) {
        int nearest = std::numeric_limits<int>::max();
        for (int r = 0; r < static_cast<int>(frame.rays.size()); ++r) {
            const RayHit& ray = frame.rays[r];
            if (!ray.label || *ray.label != step.object) continue;
            Cell c = ray_endpoint_cell(agent, frame.config, r, ray.depth);
            nearest = std::min(nearest, manhattan(agent.cell, c));
        }
        double nav_cost = nearest == std::numeric_limits<int>::max()
                              ? unobserved_cost
                              : static_cast<double>(nearest);
        value.cost += nav_cost + macro_length(step.subtask);
    }
    return value;
}

// Argmin of plan_value over the candidates; ties keep the earlier candidate.
inline Plan rank_plans_by_value(const std::vector<Plan>& candidates,
                                const PerceptionFrame& frame, const AgentState& agent,
                                double unobserved_cost) {
    std::size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        PlanValue v = plan_value(candidates[i], frame, agent, unobserved_cost);
        double cost = v.infeasible ? std::numeric_limits<double>::infinity() : v.cost;
        if (cost < best_cost) {
            best_cost = cost;
            best = i;
        }
    }
    return candidates[best];
}

} // namespace lav

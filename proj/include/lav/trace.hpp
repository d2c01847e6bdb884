#pragma once

// Episode traces: everything needed to audit or replay one episode, as
// line-delimited records with a stable field order so identical runs
// produce identical bytes.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lav/actions.hpp"
#include "lav/geometry.hpp"
#include "lav/plan.hpp"

namespace lav {

struct StepRecord {
    Action action;
    ActionResult result = ActionResult::Ok;
    Cell agent_cell;
    Heading agent_heading = Heading::North;

    friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct EpisodeTrace {
    std::uint64_t seed = 0;
    std::string config_fingerprint;
    std::string level; // paraphrase level used to render the instruction
    std::string instruction;
    std::optional<Plan> plan; // empty on language failure
    int lstar = 1;
    std::vector<StepRecord> steps;
    bool success = false;
    std::string failure_reason = "-"; // "-" when successful
    int goals_satisfied = 0;
    int goals_total = 1;
    int steps_taken = 0;

    double goal_fraction() const {
        return goals_total > 0
                   ? static_cast<double>(goals_satisfied) / static_cast<double>(goals_total)
                   : 0.0;
    }
};

inline std::string serialize_trace(const EpisodeTrace& t) {
    std::ostringstream os;
    os << "trace\n";
    os << "seed " << t.seed << "\n";
    os << "config " << t.config_fingerprint << "\n";
    os << "level " << t.level << "\n";
    os << "instruction " << t.instruction << "\n";
    os << "plan " << (t.plan ? to_string(*t.plan) : "-") << "\n";
    os << "lstar " << t.lstar << "\n";
    os << "steps " << t.steps_taken << "\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const StepRecord& s = t.steps[i];
        os << "step " << (i + 1) << " " << to_string(s.action) << " " << to_string(s.result)
           << " " << s.agent_cell.x << "," << s.agent_cell.y << ","
           << heading_char(s.agent_heading) << "\n";
    }
    os << "outcome " << (t.success ? "Success" : "Failure") << "\n";
    os << "reason " << t.failure_reason << "\n";
    os << "goals " << t.goals_satisfied << " " << t.goals_total << "\n";
    os << "end\n";
    return os.str();
}

inline EpisodeTrace parse_trace(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto fail = [](const std::string& why) -> void {
        throw std::runtime_error("trace parse error: " + why);
    };
    if (!std::getline(is, line) || line != "trace") fail("missing trace header");

    EpisodeTrace t;
    while (std::getline(is, line)) {
        if (line == "end") return t;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "seed") ls >> t.seed;
        else if (key == "config") ls >> t.config_fingerprint;
        else if (key == "level") ls >> t.level;
        else if (key == "instruction") {
            auto pos = line.find(' ');
            t.instruction = pos == std::string::npos ? "" : line.substr(pos + 1);
        } else if (key == "plan") {
            auto pos = line.find(' ');
            std::string body = pos == std::string::npos ? "" : line.substr(pos + 1);
            if (body != "-") {
                auto plan = plan_from_string(body);
                if (!plan) fail("bad plan " + body);
                t.plan = *plan;
            }
        } else if (key == "lstar") ls >> t.lstar;
        else if (key == "steps") ls >> t.steps_taken;
        else if (key == "step") {
            int index = 0;
            std::string action_str, result_str, pose_str;
            ls >> index >> action_str >> result_str >> pose_str;
            StepRecord rec;
            auto colon = action_str.find(':');
            auto kind = action_kind_from_name(colon == std::string::npos
                                                  ? action_str
                                                  : action_str.substr(0, colon));
            if (!kind) fail("bad action " + action_str);
            rec.action.kind = *kind;
            if (colon != std::string::npos)
                rec.action.target = std::stoi(action_str.substr(colon + 1));
            auto result = action_result_from_name(result_str);
            if (!result) fail("bad result " + result_str);
            rec.result = *result;
            auto c1 = pose_str.find(',');
            auto c2 = pose_str.rfind(',');
            if (c1 == std::string::npos || c2 == c1 || c2 + 2 != pose_str.size())
                fail("bad pose " + pose_str);
            rec.agent_cell.x = std::stoi(pose_str.substr(0, c1));
            rec.agent_cell.y = std::stoi(pose_str.substr(c1 + 1, c2 - c1 - 1));
            if (!heading_from_char(pose_str[c2 + 1], rec.agent_heading))
                fail("bad heading in pose " + pose_str);
            t.steps.push_back(rec);
        } else if (key == "outcome") {
            std::string outcome;
            ls >> outcome;
            t.success = outcome == "Success";
        } else if (key == "reason") {
            ls >> t.failure_reason;
        } else if (key == "goals") {
            ls >> t.goals_satisfied >> t.goals_total;
        } else if (!key.empty()) {
            fail("unknown record " + key);
        }
    }
    fail("missing end marker");
    return t;
}

} // namespace lav

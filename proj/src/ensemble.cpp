#include "textclass/ensemble.hpp"

#include <algorithm>
#include <map>

#include "textclass/types.hpp"

namespace textclass {

int vote(const std::vector<int>& member_predictions, const EnsembleSpec& spec) {
    if (member_predictions.empty()) throw Error("eval: empty prediction list");
    if (spec.tie_break == TieBreak::best_cv_f1 &&
        spec.cv_f1_scores.size() != member_predictions.size())
        throw Error("eval: best_cv_f1 tie-break needs one cv score per member");

    std::map<int, int> tally;
    for (int p : member_predictions) ++tally[p];
    int top = 0;
    for (const auto& [cls, n] : tally) top = std::max(top, n);

    std::vector<int> tied;
    for (const auto& [cls, n] : tally)
        if (n == top) tied.push_back(cls);
    if (tied.size() == 1) return tied[0];

    auto is_tied = [&](int cls) {
        return std::find(tied.begin(), tied.end(), cls) != tied.end();
    };
    if (spec.tie_break == TieBreak::first_member) {
        for (int p : member_predictions)
            if (is_tied(p)) return p;
    }
    int best_member = -1;
    for (std::size_t i = 0; i < member_predictions.size(); ++i) {
        if (!is_tied(member_predictions[i])) continue;
        if (best_member < 0 ||
            spec.cv_f1_scores[i] > spec.cv_f1_scores[static_cast<std::size_t>(best_member)])
            best_member = static_cast<int>(i);
    }
    return member_predictions[static_cast<std::size_t>(best_member)];
}

} // namespace textclass

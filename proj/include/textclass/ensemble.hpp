#ifndef TEXTCLASS_ENSEMBLE_HPP
#define TEXTCLASS_ENSEMBLE_HPP

#include <vector>

namespace textclass {

enum class TieBreak { best_cv_f1, first_member };

struct EnsembleSpec {
    TieBreak tie_break = TieBreak::best_cv_f1;
    std::vector<double> cv_f1_scores;  // per member; required for best_cv_f1
};

/// Plurality vote over the members' predicted class indices. On a tie,
/// best_cv_f1 returns the tied class predicted by the member with the
/// highest cross-validation macro-F1 (member order breaks equal scores);
/// first_member returns the tied class appearing earliest in member order.
int vote(const std::vector<int>& member_predictions, const EnsembleSpec& spec);

} // namespace textclass

#endif

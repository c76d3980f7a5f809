#ifndef TEXTCLASS_MODEL_IO_HPP
#define TEXTCLASS_MODEL_IO_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "textclass/features.hpp"
#include "textclass/model.hpp"
#include "textclass/text.hpp"

namespace textclass {

/// Model files are versioned line-oriented UTF-8 text: a header binding
/// the preprocessing pipeline (stop-word list version hash, stemmer tag,
/// max_features, vocabulary with DF values, feature-space fingerprint),
/// a config echo, and per-kind parameter blocks. Floats are rendered with
/// shortest round-trip formatting, so save -> load -> predict is exact and
/// identical runs produce byte-identical files.
inline constexpr int kModelFormatVersion = 1;

void save_model(const std::string& path, const TrainedModel& model, const FeatureSpace& space,
                std::uint64_t seed,
                const std::vector<std::pair<std::string, std::string>>& config_echo);

struct LoadedModel {
    TrainedModel model;
    FeatureSpace space;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> config_echo;
};

/// Rebuilds the feature space against the supplied stop-word list and
/// refuses (with the stored and provided version hashes in the message)
/// when the list does not match the one the model was trained with; also
/// refuses on stemmer or format version mismatch and on any corrupted
/// field, naming the line.
LoadedModel load_model(const std::string& path, const Stoplist& stoplist);

} // namespace textclass

#endif

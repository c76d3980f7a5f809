#ifndef TEXTCLASS_PORTER_HPP
#define TEXTCLASS_PORTER_HPP

#include <string>

namespace textclass {

/// Version tag folded into pipeline fingerprints; bump if the algorithm
/// ever changes.
inline constexpr const char* kStemmerVersion = "porter-v1";

/// Classic Porter stemmer (Porter 1980), matching the author's canonical
/// C implementation: words of length <= 2 are left alone, step 2 uses the
/// bli->ble and logi->log forms. Input must be a lowercase token; bytes
/// outside a-z are treated as consonants.
std::string porter_stem(const std::string& word);

} // namespace textclass

#endif

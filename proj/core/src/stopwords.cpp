#include "coordnet/stats.hpp"

namespace coordnet {

namespace {

// Default English + Hindi function-word lists; override with a file via the
// stats options. Single-letter tokens never reach the filter (the tokenizer
// drops them), so "a"/"i" are omitted.
const char* const kDefaultStopwords[] = {
    // English
    "about", "after", "all", "also", "an", "and", "any", "are", "as", "at", "be", "because",
    "been", "but", "by", "can", "could", "did", "do", "does", "for", "from", "had", "has",
    "have", "he", "her", "him", "his", "how", "if", "in", "into", "is", "it", "its", "just",
    "like", "me", "more", "most", "my", "no", "not", "of", "on", "one", "only", "or", "our",
    "out", "over", "she", "so", "some", "than", "that", "the", "their", "them", "then",
    "there", "these", "they", "this", "to", "up", "us", "was", "we", "were", "what", "when",
    "which", "who", "will", "with", "would", "you", "your",
    // Hindi
    "का", "के", "की", "को", "में", "से", "पर", "है", "हैं", "था", "थी", "थे", "और", "या",
    "एक", "यह", "वह", "जो", "कि", "ने", "भी", "तो", "ही", "नहीं", "हो", "कर", "रहा", "रही",
    "रहे", "इस", "उस", "अपने", "हम", "तुम", "आप", "मैं", "वे", "कुछ", "क्या", "अब", "जब",
    "तक", "साथ", "बाद", "लिए", "गया", "गई", "गए", "करना", "वाले", "दिया", "हुआ", "हुई", "हुए",
};

}  // namespace

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words(std::begin(kDefaultStopwords),
                                           std::end(kDefaultStopwords));
  return words;
}

}  // namespace coordnet

#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace hsc {

/// One sentence of the text task. A sentence with word_count == 0 is a
/// padding sentinel: it carries no data and never binds a QoS constraint.
struct Sentence {
    int serial_index = 0;   // j, 1-based serial position in the text
    int word_count = 0;     // O_j
    int char_count = 0;     // u, ASCII characters
    double similarity_threshold = 0.0;  // M_th, in [0.6, 1] when sampled

    /// ASCII bit size, 8 bits per character.
    [[nodiscard]] int bit_count() const { return 8 * char_count; }
    /// Semantic symbol count for k DNN outputs per word.
    [[nodiscard]] long symbol_count(int k) const {
        return static_cast<long>(k) * word_count;
    }
    [[nodiscard]] bool is_sentinel() const { return word_count == 0; }
};

/// The full text split over L subcarriers, N sentences each. If the sentence
/// count does not divide L, zero-length sentinels pad the tail so that
/// P = N * L holds exactly.
struct TextPartition {
    std::vector<Sentence> sentences;
    int subcarriers = 0;           // L
    int sentences_per_carrier = 0; // N

    [[nodiscard]] int total_sentences() const {
        return static_cast<int>(sentences.size());
    }

    static TextPartition from_sentences(std::vector<Sentence> sentences, int L);
};

/// Inverse of j = (n-1)L + l; returns (n, l) with 1 <= l <= L.
std::pair<int, int> serial_to_grid(int serial_index, int L);

/// Synthetic corpus: P sentences with word counts uniform on word_range and
/// char_count = chars_per_word * O + (O - 1) inter-word spaces.
/// Similarity thresholds are left at zero; see qos_sample.
std::vector<Sentence> generate_text(int num_sentences,
                                    std::pair<int, int> word_range,
                                    int chars_per_word, std::uint64_t seed);

/// Draws a fresh independent uniform threshold in [lo, hi] for every
/// non-sentinel sentence. The corpus itself is untouched.
void qos_sample(std::vector<Sentence>& sentences, std::pair<double, double> range,
                std::uint64_t seed);
void qos_sample(TextPartition& partition, std::pair<double, double> range,
                std::uint64_t seed);

/// Line-per-sentence fixture format: "j O u M_th".
void export_corpus(const std::vector<Sentence>& sentences, std::ostream& out);
std::vector<Sentence> import_corpus(std::istream& in);

}  // namespace hsc

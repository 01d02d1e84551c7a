#include "hsc/text.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hsc {

TextPartition TextPartition::from_sentences(std::vector<Sentence> sentences, int L) {
    if (L <= 0) throw std::invalid_argument("subcarrier count must be positive");
    if (sentences.empty()) throw std::invalid_argument("empty sentence list");
    // Pad to an exact multiple of L with zero-length sentinels.
    while (sentences.size() % static_cast<std::size_t>(L) != 0) {
        Sentence pad;
        pad.serial_index = static_cast<int>(sentences.size()) + 1;
        sentences.push_back(pad);
    }
    TextPartition p;
    p.subcarriers = L;
    p.sentences_per_carrier = static_cast<int>(sentences.size()) / L;
    p.sentences = std::move(sentences);
    return p;
}

std::pair<int, int> serial_to_grid(int serial_index, int L) {
    if (serial_index <= 0 || L <= 0)
        throw std::domain_error("serial_to_grid: indices must be positive");
    const int n = (serial_index - 1) / L + 1;
    const int l = (serial_index - 1) % L + 1;
    return {n, l};
}

std::vector<Sentence> generate_text(int num_sentences, std::pair<int, int> word_range,
                                    int chars_per_word, std::uint64_t seed) {
    if (num_sentences <= 0) throw std::invalid_argument("sentence count must be positive");
    if (word_range.first <= 0 || word_range.first > word_range.second)
        throw std::invalid_argument("empty word-count range");
    if (chars_per_word <= 0) throw std::invalid_argument("chars_per_word must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> words(word_range.first, word_range.second);
    std::vector<Sentence> out(static_cast<std::size_t>(num_sentences));
    for (int j = 0; j < num_sentences; ++j) {
        Sentence& s = out[static_cast<std::size_t>(j)];
        s.serial_index = j + 1;
        s.word_count = words(rng);
        s.char_count = chars_per_word * s.word_count + (s.word_count - 1);
    }
    return out;
}

void qos_sample(std::vector<Sentence>& sentences, std::pair<double, double> range,
                std::uint64_t seed) {
    if (!(range.first > 0.0) || range.first > range.second || range.second > 1.0)
        throw std::invalid_argument("threshold range must satisfy 0 < lo <= hi <= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(range.first, range.second);
    for (Sentence& s : sentences) {
        if (s.is_sentinel()) continue;
        s.similarity_threshold = dist(rng);
    }
}

void qos_sample(TextPartition& partition, std::pair<double, double> range,
                std::uint64_t seed) {
    qos_sample(partition.sentences, range, seed);
}

void export_corpus(const std::vector<Sentence>& sentences, std::ostream& out) {
    for (const Sentence& s : sentences) {
        out << s.serial_index << ' ' << s.word_count << ' ' << s.char_count << ' '
            << s.similarity_threshold << '\n';
    }
}

std::vector<Sentence> import_corpus(std::istream& in) {
    std::vector<Sentence> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        Sentence s;
        if (!(row >> s.serial_index >> s.word_count >> s.char_count >>
              s.similarity_threshold))
            throw std::runtime_error("malformed corpus record: " + line);
        out.push_back(s);
    }
    return out;
}

}  // namespace hsc

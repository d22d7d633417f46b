#pragma once

#include <algorithm>
#include <vector>

namespace zqr {

/// Sorted, deduplicated set of words with binary-search membership.
template <class Word>
class WordSet {
public:
    WordSet() = default;
    explicit WordSet(std::vector<Word> words) : words_(std::move(words)) {
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }

    bool contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const std::vector<Word>& words() const noexcept { return words_; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    std::vector<Word> words_;
};

}  // namespace zqr

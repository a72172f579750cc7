#pragma once

#include <vector>

#include "katabol/partition.hpp"

namespace katabol {

// A word over positive letters, stored left to right.
using Word = std::vector<int>;

// Letter multiplicities (index i counts letter i+1); trimmed of trailing zeros.
std::vector<int> evaluation(const Word& w);

bool is_partition_evaluation(const Word& w);

// Crystal-style operator on letters i, i+1: bracket-pair factors (i+1)(i); the unpaired
// residue a^r b^s becomes a^s b^r.  Letters outside {i, i+1} are untouched.
Word sigma(int i, const Word& w);

// Sort the evaluation to a partition with the minimal-length bubble composition of sigmas;
// returns the transformed word.
Word sort_evaluation(const Word& w);

// Charge via the circular labeling: traverse right-to-left, wrapping increments the label
// index; each pass labels the first 1, then the first 2 after it, and so on.  Words with
// non-partition evaluation are sorted with sigmas first.
int charge(const Word& w);

// Every suffix of w contains at least as many of letters[i] as of letters[j] for i < j.
bool is_yamanouchi(const Word& w, const std::vector<int>& letters);

}  // namespace katabol

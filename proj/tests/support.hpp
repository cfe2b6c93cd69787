#pragma once

#include "fmrig/fmrig.hpp"

#include <string>

namespace fmrig::test {

inline FreeRig<NatPow> fm(std::size_t k = 1) { return {NatPow{k}, true}; }
inline FreeRig<FreeRig<NatPow>> ffm(std::size_t k = 1) { return {fm(k), true}; }

inline NormalForm<NatPow> nf(const std::string& text, std::size_t k = 1) {
  return normalize(parse(text, NatPow{k}), fm(k));
}

inline NormalForm<FreeRig<NatPow>> nf2(const std::string& text, std::size_t k = 1) {
  return normalize(parse(text, fm(k)), ffm(k));
}

}  // namespace fmrig::test

#pragma once

// Digit-for-digit check of the published 264-bit worked example.

#include <string>
#include <string_view>
#include <vector>

namespace fermatlab {

namespace worked_example {

inline constexpr std::string_view n =
    "24758167959654528007156374531915464081839760935532218683689708649238085888673119";
inline constexpr std::string_view p = "6847944682037444681162770672798288913849";
inline constexpr std::string_view q = "3615415881585117908550243505309785526231";

inline constexpr std::string_view x0 = "4975758028647949436694003969298664117473";
inline constexpr std::string_view p0 = "3171681298218633703780106501840055232610";
inline constexpr std::string_view c = "255922253163331858162503119755373102567";
inline constexpr std::string_view alpha = "1360342147062831528143760463988878591242";
inline constexpr std::string_view boundary = "1268818297305227106356971012171159349956";
inline constexpr std::string_view z = "91523849757604421786789451817719241286";
inline constexpr std::string_view sieved = "36609539903041768714715780727087696514";
inline constexpr std::string_view delta = "219312713260290089447787339028285406053";

}  // namespace worked_example

struct VerifyEntry {
  std::string name;
  std::string expected;
  std::string actual;

  bool match() const { return expected == actual; }
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;

  bool passed() const;
};

/// Recomputes X0, P0, c, alpha, 0.255*X0, z, 0.4z and c - 0.4z from the
/// example's n, p and q.
VerifyReport verify_example();

}  // namespace fermatlab

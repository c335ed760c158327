#pragma once

// Coefficient text for the large catalog models, kept separate from the
// structured catalog data for readability.  Whitespace is insignificant to
// the expression parser; juxtaposition denotes multiplication.

namespace k3fib {
namespace catalog_text {

inline constexpr const char* eq210_a2_v0 = R"__((ad-bc)(s+ad-ab)(s-ab-bc)((b+c-ad+bc-1) s +b^2c^2+b^2c-2abc-a^2d^2-bcd+a^2d-ad-ab^2 +ad^2 +bc^2+ab-ab^2c+a^2bd))__";

inline constexpr const char* eq210_a2_v1 = R"__((ad-bc)(s+ad-ab)(s-ab+bc)((b+c-ad+bc-1) s +b^2c^2+b^2c-2abc-a^2d^2-bcd+a^2d-ad-ab^2 +ad^2 +bc^2+ab-ab^2c+a^2bd))__";

inline constexpr const char* eq210_a4_v0 = R"__(-(s-ab+ad)^2(s-ab+bc)^3(ad-bc)^3 (s^3-3b(a-c)s^2 +3b^2(a-c)^2s-b^2(a-c)^3))__";

inline constexpr const char* eq210_a4_v1 = R"__(-(s-ab+ad)^2(s-ab+bc)^3(ad-bc)^3 (s^3-3b(a-c)s^2 +3b^2(a-c)^2s-b^3(a-c)^3))__";

inline constexpr const char* eq210_a6 = R"__(bc(a-c)(b-d)(ad-bc)^4(s-ab+ad)^3(s-ab+bc)^3)__";

// Repaired closed form for class 2.10: the a4 cofactor is linear (the source
// text garbles it into a cubic) and the a6 exponent on the second linear
// factor is 5, not 3.  These readings make the closed form isomorphic to the
// model produced by the neighbor step, with identical fiber placement.
inline constexpr const char* eq210_a2_r = R"__((ad-bc)(s-ab+ad)(s-ab+bc)((b+c-ad+bc-1)s +b^2c^2+b^2c-2abc-a^2d^2-bcd+a^2d-ad-ab^2+ad^2+bc^2+ab-ab^2c+a^2bd))__";

inline constexpr const char* eq210_a4_r = R"__(-(ad-bc)^3(s-ab+ad)^2(s-ab+bc)^3 ((b+c-1)s+abd+acd+b^2c+bc^2+bc-ab^2-2abc-bcd-cd))__";

inline constexpr const char* eq210_a6_r = R"__(bc(a-c)(b-d)(ad-bc)^4(s-ab+ad)^3(s-ab+bc)^5)__";

inline constexpr const char* g210 = R"__(b(a-c)(b-d)(ad-bc)u^2 v^2 +ac^2(ad-bc+b-d) u^3 +c(2ab^2-b^2c^2-abd-b^2c+bcd-ad^2+a^2d^2)u^2 v -b(b^2c^2+ad^2-a^2d^2+b^2c+a^2bd-bcd-ab^2-ab^2c)u v^2 +c(bc^2+abc+2ad-2a^2d-2ab)u^2 -b^3 (a-c) v^2 +(ad^2-2ab^2c+b^2c-2ab^2+abd+3b^2c^2-a^2d^2-bcd) uv +(ab-ad-2bc^2+abc+a^2d) u + 2b^2 (a-c) v -b(a-c))__";

inline constexpr const char* s612_a4 = R"__(-(27 (ad-bc)^4t^8-108 (a^3d^3-a^2bcd^2-ab^2c^2d+b^3c^3-2 a^3d^2-2 a^2bcd +4 a^2bd^2+4 a^2cd^2-2 a^2d^3+4 ab^2c^2-2 ab^2cd-2 abc^2d-2 abcd^2-2 b^3c^2 -2 b^2c^3+4 b^2c^2d-6 a^2bd+4 a^2d^2-6 ab^2c+16 abcd-6 acd^2+4 b^2c^2-6 bc^2d) t^6 +54 ( 3 a^2d^2+2 abcd+3 b^2c^2-8 a^2d+4 abc+4 abd+4 acd-8 ad^2-8 b^2c -8 bc^2+4 bcd+8 a^2+4 ab-8 ac+8 ad+8 b^2+8 bc-8 bd+8 c^2+4 cd+8 d^2 -8 a-8 b-8 c-8 d+8 ) t^4-108 ( ad+bc-2 a-2 b-2 c-2 d+4 ) t^2+27))__";

inline constexpr const char* s612_a6 = R"__(54 ( ad-bc ) ^6t^12-324 ( a^3d^3-a^2bcd^2-ab^2c^2d+b^3c^3-2 a^3d^2-2 a^2bcd+4 a^2bd^2 +4 a^2cd^2-2 a^2d^3+4 ab^2c^2-2 ab^2cd-2 abc^2d-2 abcd^2-2 b^3c^2-2 b^2c^3+4 b^2c^2d -6 a^2bd+4 a^2d^2-6 ab^2c+16 abcd-6 acd^2+4 b^2c^2-6 bc^2d)(ad-bc)^2t^10 +162 ( 5 a^4d^4-4 a^3bcd^3-2 a^2b^2c^2d^2-4 ab^3c^3d+5 b^4c^4-16 a^4d^3+4 a^3bcd^2 +20 a^3bd^3+20 a^3cd^3-16 a^3d^4-8 a^2b^2c^2d-8 a^2b^2cd^2-8 a^2bc^2d^2+4 a^2bcd^3 +20 ab^3c^3+4 ab^3c^2d+4 ab^2c^3d-8 ab^2c^2d^2-16 b^4c^3-16 b^3c^4+20 b^3c^3d+16 a^4d^2 +16 a^3bcd-52 a^3bd^2-40 a^3cd^2+40 a^3d^3+40 a^2b^2c^2+152 a^2b^2cd+40 a^2b^2d^2 -64 a^2bc^2d-88 a^2bcd^2-40 a^2bd^3+40 a^2c^2d^2-52 a^2cd^3+16 a^2d^4-52 ab^3c^2 +16 ab^3cd-40 ab^2c^3-88 ab^2c^2d-64 ab^2cd^2+16 abc^3d+152 abc^2d^2+16 abcd^3 +16 b^4c^2+40 b^3c^3-40 b^3c^2d+16 b^2c^4-52 b^2c^3d+40 b^2c^2d^2+48 a^3bd-40 a^3d^2 -96 a^2b^2c-96 a^2b^2d-16 a^2bcd+104 a^2bd^2+104 a^2cd^2-40 a^2d^3+48 ab^3c +104 ab^2c^2-16 ab^2cd-16 abc^2d-16 abcd^2-96 ac^2d^2+48 acd^3-40 b^3c^2-40 b^2c^3 +104 b^2c^2d+48 bc^3d-96 bc^2d^2+72 a^2b^2-96 a^2bd+40 a^2d^2-96 ab^2c+160 abcd -96 acd^2+40 b^2c^2-96 bc^2d+72 c^2d^2 ) t^8-216 ( 5 a^3d^3+3 a^2bcd^2+3 ab^2c^2d +5 b^3c^3-18 a^3d^2-3 a^2bcd+9 a^2bd^2+9 a^2cd^2-18 a^2d^3+9 ab^2c^2-3 ab^2cd -3 abc^2d-3 abcd^2-18 b^3c^2-18 b^2c^3+9 b^2c^2d+24 a^3d-12 a^2bc-15 a^2bd -24 a^2cd+48 a^2d^2-15 ab^2c-12 ab^2d-24 abc^2-60 abcd-24 abd^2-12 ac^2d -15 acd^2+24 ad^3+24 b^3c+48 b^2c^2-24 b^2cd+24 bc^3-15 bc^2d-12 bcd^2-16 a^3 -12 a^2b+24 a^2c-36 a^2d-12 ab^2+96 abc+96 abd+24 ac^2+96 acd-36 ad^2 -16 b^3-36 b^2c+24 b^2d-36 bc^2+96 bcd+24 bd^2-16 c^3-12 c^2d-12 cd^2 -16 d^3+24 a^2-24 ab-96 ac-36 ad+24 b^2-36 bc-96 bd+24 c^2-24 cd +24 d^2+24 a+24 b+24 c+24 d-16 ) t^6+162 ( 5 a^2d^2+6 abcd+5 b^2c^2 -16 a^2d-4 abc-4 abd-4 acd-16 ad^2-16 b^2c-16 bc^2-4 bcd+16 a^2 +20 ab+8 ac+40 ad+16 b^2+40 bc+8 bd+16 c^2+20 cd+16 d^2-40 a -40 b-40 c-40 d+40 ) t^4-324 ( ad+bc-2 a-2 b-2 c-2 d+4 ) t^2+54)__";

inline constexpr const char* s613_a4_v0 = R"__(-(27t^8+(216bc+216+216ad+648ac-432c-108b-108d-432a)t^6 +(432-432a-432d-432b-432c+432bc+432ad+108bd-432ad^2-432b^2c +432a^2+432d^2a^2-432da^2+216abc+432ac+216cd+216bcd+216abd+216ab -432bc^2+432b^2c^2+432c^2+162d^2+162b^2-432abcd+216acd)t^4 -108(b-d)(b^2-2b^2c-2b+4bc+4abd-2ab-4bcd-4ad+2cd+2d+2ad^2 -d^2)t^2+27(b-d)^4))__";

inline constexpr const char* s613_a4_v1 = R"__(-(27t^8+(216bc+216+216ad+648ac-432c-108b-108d-432a)t^6 +(432-432a-432d-432b-432c+432bc+432ad+108bd-432ad^2-432b^2c +432a^2+432d^2a^2-432da^2+216abc-432ac+216cd+216bcd+216abd+216ab -432bc^2+432b^2c^2+432c^2+162d^2+162b^2-432abcd+216acd)t^4 -108(b-d)(b^2-2b^2c-2b+4bc+4abd-2ab-4bcd-4ad+2cd+2d+2ad^2 -d^2)t^2+27(b-d)^4))__";

inline constexpr const char* s613_a6 = R"__(54t^12+(1944ac+648bc+648ad-324b-324d-1296a+648-1296c)t^10 +(2592-6480a-2592d-2592b-6480c-15552a^2c+7776abc^2+6480bc +6480ad+972bd-2592ad^2-2592b^2c+6480a^2+2592a^2d^2-6480a^2d-8424abc -15552ac^2+11664a^2c^2+16848ac+3240cd-648bcd-648abd+3240ba-6480bc^2 +2592b^2c^2+6480c^2+810d^2+810b^2+1296abcd-8424acd+7776a^2cd)t^8 +(3456-5184a-5184d-5184b-5184c+2592a^2bc+2592ab^2c^2-5184a^2c+5184abc^2 +7776bc+7776ad+2592bd+2592a^2b-10368ad^2-10368b^2c-1944cd^2+3888ad^3 +3888b^3c-648bd^2-648b^2d+3240ab^2c-5184a^2+3456a^3+7776a^2d^2-5184a^3d^2 -5184a^3d-10368bc^2d+7776a^2d+2592b^2c^2d+2592a^2bd^2+5184ab^2cd+5184abcd^2 -5184ab^2c^2d-5184a^2bcd^2+5184abc^2d+5184a^2bcd-20736cba-5184ac^2-5184b^3c^2 +3456a^3d^3-5184a^2d^3+3456b^3c^3-5184b^2c^3-5184bc^3+20736ac+2592c^2d+5184cd -10368a^2bd+1944bcd+1944abd+5184ab+7776c^2b+7776c^2b^2-5184c^2+3888d^2 +3888b^2+3456c^3-1080b^3-1080d^3+3888abcd+2592ac^2d-20736acd+2592a^2cd^2 +3240d^2ac+5184a^2cd-1944ab^2+648b^2cd+648abd^2-1944bcd^2-1944ab^2d)t^6 +(2592b^4c^2-2592ad^4+2592a^2d^4-2592b^4c-5184bd-324b^2d^2-6480ad^2 -6480b^2c+1296cd^2+6480ad^3+6480b^3c+2592bd^2+2592b^2d-6480ab^2c -648bd^3-648b^3d+6480d^2a^2+2592bc^2d-10368b^2c^2d-10368a^2bd^2+20088ab^2cd +20088abcd^2-10368ab^2cd^2-6480b^3c^2+2592a^2b^2-648ab^3-6480a^2d^3+2592c^2d^2 -648cd^3-6480bc^2d^2+3240ab^3c-6480a^2b^2d+3240ab^3d-1296ab^2d^2+648abd^3 +648b^3cd-1296b^2cd^2+3240bcd^3+2592b^3c^2d+2592a^2bd^3+3240acd^3+6480b^2c^2d^2 +6480a^2b^2d^2+2592a^2bd+5184bcd+5184abd+6480c^2b^2-6480abcd^3-6480ab^3cd +2592d^2+2592b^2+810b^4-2592b^3-2592d^3+810d^4-10368abcd-6480acd^2 +1296ab^2+1944b^2cd+1944abd^2-7776bcd^2-7776ab^2d)t^4 -324(b-d)^3(b^2-2b^2c-2b+4bc+4abd-2ab-4bcd-4ad+2cd+2d+2ad^2 -d^2)t^2+54(b-d)^6)__";

inline constexpr const char* s621_a1 = R"__(2s^2+4b-4ac-2ad-2-2d+2c+4a-2cb)__";

inline constexpr const char* s621_a2 = R"__(2c(1-a)s^2-2a+2a^2cd+2abcd+4ac+2ad^2-2a^2d-2ac^2+4cd+4b^2c+2abc^2 -4bcd-4a^2c+2a^2c^2-2abc-4bad+4bd+4ad-4bc-4b^2-4d+4b-4acd+2a^2)__";

inline constexpr const char* s621_a3 = R"__(-(4c(a-1)s^4 -4(3a^2c^2-a^2d -2acd-c+a^2+c^2+abcd+ad^2-bc^2+5ac+2a^2cd-4a^2c-3abc-2bcd-a+2abc^2 +cd-4ac^2+2bc)s^2+4a(c+d-1)(1-3a+a^2cd+abcd+6ac+ad^2-a^2d-3ac^2 +2cd+3abc^2-2bcd-4a^2c+2a^2c^2-5abc+b^2c^2-2bad+2ad+2bc-2d-2c-2acd +2a^2-2bc^2+c^2+d^2+2ab)))__";

inline constexpr const char* s621_a4 = R"__(-(4c^2(a-1)^2s^4 -8ac(c+d-1)(a-1)(ac-a-c+cb-d+1)s^2+4a^2(c+d-1)^2(ac -a-c+cb-d+1)^2))__";

inline constexpr const char* s621_a6 = R"__(-8(c(1-a)s^2-a+a^2cd+abcd+2ac+ad^2-a^2d-ac^2+2cd +2b^2c+abc^2-2bcd-2a^2c+a^2c^2-abc-2bad+2bd+2ad-2bc-2b^2-2d+2b-2acd +a^2 ) (c^2(a-1)^2s^4 -2ac(c+d-1)(a-1)(ac-a-c+cb-d+1)s^2 + a^2(c+d-1)^2(ac -a-c+cb-d+1)^2))__";

inline constexpr const char* s622_a2 = R"__(-9((1-2a-2b+c+bc+d+ad)s^2 + (4bc^2b+c^2b^2d-ab^2c^2+ab^2c-4b^2c^2 +2b^2c^3-abcd^2-4abcd-abc^2d+a^2bcd+ab^2cd+cd^2-cd+2bc^3+2ad-2bc^2+2b^2c -2b^2cd-bcd+bcd^2-ac^2d-acd+2a^2cd-a^2cd^2+2a^2d^2-2ad^2-2a^2d+c^2d-3abc^2 +4abc-ab+abd^2+a^2bd-a^2bd^2)s -bc (c+d-1)(a-c) (ad-c-bc-d+1)(ad-bc +b-d)))__";

inline constexpr const char* s622_a4 = R"__(81s(s+acd+ad^2-bc^2-bcd-ad+bc)(s+abd+acd-b^2c-bc^2-ad+b^2+2bc -bd-cd-b+d)(s+abcd-bc^2-bcd+bc)(s-a+a^2+c-ac+abc-bc^2+ad -a^2d-cd+acd))__";

inline constexpr const char* s623_a4 = R"__(27s^2(3(a-1)s^3 + (a+d+b+c+abcd-a^2d^2-b^2c^2-a^2-b^2-c^2-d^2-ad-bc +a^2d+7abc+ad^2+bc^2+b^2c+7cd+bd-8ab+ac+7abd-8acd-8bcd-1)s^2+(7bc^2d^2 -b^3c^2d-2acd^2+9bc^2d+b^3c^2d-2a^2cd^2+3a^2bd^2+2a^2cd^3-2a^2bd^3+7ac^2d^2-3b^2c^2d^2 -5b^2c^2d-3bc^3d-acd^3-3abc^2d^2+3ab^2c^2d+3abcd^3-a^2bcd^2-8abcd^2+2ab^2cd+3ab^2cd^2 -8abc^2d+5abcd-a^2d^3+3a^2d^2+3b^3c^2+3b^2c^3-2b^3c^3-3b^2c^2-4c^2d^2+ad+bc-2a^2d +4abc-2ac^2d-2abd^3+4ab^2d^2+4ab^2c^2-b^2cd^2+2a^2cd-a^2bd-7ab^2c-abc^2-7ab^2d -3ad^2+2ad^3+cd^2+cd-3c^2d-b^3c+2c^3d-bc^3-a^2bcd+3ab^2-3ab-abd^2+6abd+acd -7bcd+7b^2cd-b^3cd)s + (a^2bc^2d^3-a^2b^2c^2d^2-a^2b^2cd^3-a^2b^2d^4-a^2bcd^4-a^2c^2d^4 +2ab^3c^3d+2ab^3c^2d^2+2ab^3cd^3-2ab^2c^3d^2+2ab^2c^2d^3+2abc^3d^3-b^4c^4-b^4c^3d-b^4c^2d^2 +b^3c^4d-b^3c^3d^2-b^2c^4d^2+a^2b^2cd^2+2a^2b^2d^3+a^2bc^2d^2+4a^2bcd^3+2a^2bd^4+a^2c^2d^3+a^2cd^4 -3ab^3c^2d-3ab^3cd^2-3ab^2c^3d-4ab^2c^2d^2-5ab^2cd^3+abc^3d^2-5abc^2d^3-2ac^3d^3+2b^4c^3 +b^4c^2d+2b^3c^4+3b^3c^2d^2-2b^2c^4d+4b^2c^3d^2+2bc^4d^2-a^2b^2d^2-3a^2bcd^2-4a^2bd^3-a^2c^2d^2 -3a^2cd^3-a^2d^4+ab^3cd+5ab^2c^2d+7ab^2cd^2+abc^3d+4abc^2d^2+4abcd^3+ac^3d^2+3ac^2d^3 -b^4c^2-4b^3c^3-b^3c^2d-b^2c^4+3b^2c^3d-4b^2c^2d^2+bc^4d-5bc^3d^2-c^4d^2+2a^2bd^2+2a^2cd^2 +2a^2d^3-2ab^2cd-2abc^2d-5abcd^2-2ac^2d^2-acd^3+2b^3c^2+2b^2c^3-b^2c^2d-2bc^3d+3bc^2d^2 +2c^3d^2-a^2d^2+abcd+acd^2-b^2c^2+bc^2d-c^2d^2)))__";

inline constexpr const char* s623_a6 = R"__(27s^3((18a^2-9a^2d-9abc+18ab-9ac+27ad-18bc-27a+9b+9c-18d+9)s^4 +(2a^3d^3 -3a^2bcd^2-3ab^2c^2d+2b^3c ^3-3a^3d^2+3a^2bcd-30a^2bd^2+33a^2cd^2-3a^2d^3-30ab^2c^2+3ab^2cd +3abc^2d+66abcd^2-3b^3c^2-3b^2c^3-30b^2c^2d-3a^3d+33a^2bc+57a^2bd-60a^2cd-27a^2d^2 +57ab^2c+33ab^2d+3abc^2-45abcd+3abd^2+33ac^2d-69acd^2-3ad^3-3b^3c-27b^2c^2+3b^2cd -3bc^3+57bc^2d-30bcd^2+2a^3-30a^2b-3a^2c+36a^2d-30ab^2-75abc-75abd-3ac^2 +51acd+36ad^2+2b^3+36b^2c-3b^2d+36bc^2-12bcd-3bd^2+2c^3-30c^2d+33cd^2+2d^3 -3a^2+66ab+12ac-27ad-3b^2-27bc+12bd-3c^2+3cd-3d^2-3a-3b-3c-3d+2)s^3 +(3a^3bcd^3+6a^3bd^4-6a^3cd^4+3a^2b^2c^2d^2-12a^2b^2cd^3+12a^2bc^2d^3-9a^2bcd^4-12ab^3c^3d +3ab^3c^2d^2-3ab^2c^3d^2+27ab^2c^2d^3+6b^4c^4+3b^4c^3d-3b^3c^4d-18b^3c^3d^2-12a^3bcd^2 -12a^3bd^3+9a^3cd^3+3a^3d^4+27a^2b^2c^2d-3a^2b^2cd^2-33a^2b^2d^3-3a^2bc^2d^2+3a^2bcd^3 +3a^2bd^4-45a^2c^2d^3+6a^2cd^4-33ab^3c^3-3ab^3c^2d+27ab^3cd^2+39ab^2c^3d+102ab^2c^2d^2 +45ab^2cd^3+33abc^3d^2-99abc^2d^3-9abcd^4-12b^4c^3-12b^4c^2d-12b^3c^4-42b^3c^3d -3b^3c^2d^2-3b^2c^4d+57b^2c^3d^2-18b^2c^2d^3+3a^3bcd+3a^3bd^2+9a^3cd^2+3a^3d^3+15a^2b^2c^2 +39a^2b^2cd+72a^2b^2d^2-93a^2bc^2d-69a^2bcd^2+9a^2bd^3+72a^2c^2d^2+66a^2cd^3+6a^2d^4 +72ab^3c^2+39ab^3cd+15ab^3d^2+27ab^2c^3-165ab^2c^2d-252ab^2cd^2-15ab^2d^3-3abc^3d -42abc^2d^2+36abcd^3+6abd^4-45ac^3d^2+57ac^2d^3+3acd^4+3b^4c^2+3b^4cd+6b^3c^3 +54b^3c^2d-12b^3cd^2+3b^2c^4+102b^2c^3d-3b^2c^2d^2+3b^2cd^3+12bc^4d-72bc^3d^2+33bc^2d^3 +3a^3bd-6a^3cd-12a^3d^2-33a^2b^2c-57a^2b^2d+3a^2bc^2+105a^2bcd+6a^2bd^2+9a^2c^2d -78a^2cd^2-30a^2d^3-57ab^3c-33ab^3d-90ab^2c^2+90ab^2cd+12ab^2d^2-12abc^3+132abc^2d +165abcd^2+3abd^3+9ac^3d-6ac^2d^2-54acd^3-6ad^4+3b^4c+21b^3c^2+3b^3cd+21b^2c^3 -102b^2c^2d+18b^2cd^2+3bc^4-75bc^3d+33bc^2d^2-6c^4d+33c^3d^2-15c^2d^3+6a^3d+18a^2b^2 -12a^2bc-27a^2bd-3a^2cd+30a^2d^2+18ab^3+90ab^2c+30ab^2d+45abc^2-123abcd-24abd^2 -33ac^2d+15acd^2+12ad^3-15b^3c-39b^2c^2-15bc^3+63bc^2d-18bcd^2+12c^3d-27c^2d^2 -3cd^3+9a^2b-6a^2d-27ab^2-42abc+6abd+27acd-3ad^2+15b^2c+15bc^2-3bcd-3c^2d +12cd^2+9ab-3ad-3bc-3cd)s^2 - (abcd+2abd^2+acd^2-b^2c^2-2b^2cd-bc^2d-2abd -2acd-2ad^2+b^2c+bc^2+3bcd+c^2d+2ad-bc-cd) (2abcd+abd^2-acd^2-2b^2c^2-b^2cd +bc^2d-abd-acd-ad^2+2b^2c+2bc^2-c^2d+ad-2bc+cd) (abcd-abd^2-2acd^2-b^2c^2 +b^2cd+2bc^2d+abd+acd+ad^2+b^2c+bc^2-3bcd-2c^2d-ad-bc+2cd)))__";

inline constexpr const char* s624_a2 = R"__(s(s^4 -(3 ac+ad+bc-2 a-2 b-2 c+d+1) s^3 + (3 a^2c^2+2 a^2cd+2 abc^2 +abcd-4 a^2c-a^2d-3 abc+abd-4 ac^2-2 acd+ad^2-b^2c-bc^2-2 bcd+a^2 +5 ac-ad+b^2+3 bc-bd+c^2+cd-a-b-c+d) s^2 - (a^3c^3+a^3c^2d+a^2bc^3 +a^2bc^2d-2 a^3c^2-a^3cd-a^2bc^2+4 a^2bcd-2 a^2c^3-3 a^2c^2d-a^2cd^2 -4 ab^2c^2 -abc^3-abc^2d+2 abcd^2-2 b^2c^2d+a^3c+4 a^2c^2-a^2cd-2 a^2d^2+4 ab^2c+5 abc^2 -4 abcd+ac^3+2 ac^2d-acd^2+2 b^2c^2+2 b^2cd+2 bc^2d-2 bcd^2-2 a^2c+2 a^2d -6 abc-2 abd-2 ac^2+4 acd+2 ad^2-2 b^2c-2 bc^2+2 cd^2+2 ab+ac-2 ad +2 bc-2 cd) s +3ac(bc-c-d+1)(a+d-1)(ad-bc+b-d)))__";

inline constexpr const char* s624_a4_v0 = R"__(s^2(s-ac-cd+c)(s+abc-ac-ad-bs+a) ( (a-1)(ad-bc)(c+d-1)s^3 -(ad-bc+b-d)(3 a^2c^2+2 a^2cd+2 abc^2+abcd-4 a^2c-a^2d-3 abc-4 ac^2 -2 acd+ad^2-bc^2-2 bcd+a^2+5 ac+2 bc+c^2+cd-a-c)s^2 + (ad-bc+b -d)(2 a^3c^3+2 a^3c^2d+2 a^2bc^3+2 a^2bc^2d-4 a^3c^2-2 a^3cd-2 a^2bc^2 +2 a^2bcd -4 a^2c^3-6 a^2c^2d-2 a^2cd^2-2 ab^2c^2-2 abc^3-2 abc^2d+abcd^2-b^2c^2d +2 a^3c +8 a^2c^2+4 a^2cd-a^2d^2+2 ab^2c+4 abc^2-2 abcd+2 ac^3+4 ac^2d+acd^2+b^2c^2 +b^2cd+bc^2d-bcd^2-4 a^2c+a^2d-3 abc-abd-4 ac^2-acd+ad^2-b^2c-bc^2 +cd^2+ab+2 ac-ad+bc-cd)-3 ac (bc-c-d+1)(a+d-1)(ad-bc+b-d)^2))__";

inline constexpr const char* s624_a4_v1 = R"__(s^2(s-ac-cd+c)(s+abc-ac-ad-bs+a) ( (a-1)(ad-bc)(c+d-1)s^3 -(ad-bc+b-d)(3 a^2c^2+2 a^2cd+2 abc^2+abcd-4 a^2c-a^2d-3 abc-4 ac^2 -2 acd+ad^2-bc^2-2 bcd+a^2+5 ac+2 bc+c^2+cd-a-c)s^2 + (ad-bc+b -d)(2 a^3c^3+2 a^3c^2d+2 a^2bc^3+2 a^2bc^2d-4 a^3c^2-2 a^3cd-2 a^2bc^2 +2 a^2bcd -4 a^2c^3-6 a^2c^2d-2 a^2cd^2-2 ab^2c^2-2 abc^3-2 abc^2d+abcd^2-b^2c^2d +2 a^3c +8 a^2c^2+4 a^2cd-a^2d^2+2 ab^2c+4 abc^2-2 abcd+2 ac^3+4 ac^2d+acd^2+b^2c^2 +b^2cd+bc^2d-bcd^2-4 a^2c+a^2d-3 abc-abd-4 ac^2-acd+ad^2-b^2c-bc^2 +cd^2+ab+2 ac-ad+bc-cd)s-3 ac (bc-c-d+1)(a+d-1)(ad-bc+b-d)^2))__";

inline constexpr const char* s624_a6 = R"__(ac(ad-bc+b-d)^2 s^3 (s-ac-cd+c)^2 ((1-b)s+abc-ac-ad+a)^2 ( (1-a)(c+d -1)(ac+bc-a-c-d+1)s+(bc-c-d+1)(a+d-1)(ad-bc+b-d)))__";

}  // namespace catalog_text
}  // namespace k3fib

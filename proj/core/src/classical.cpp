// Copyright 2026 The wavelearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wavelearn/classical.hpp"

#include <charconv>
#include <span>
#include <string>

#include "wavelearn/errors.hpp"

namespace wavelearn {
namespace {

// Orthonormal scaling filters, reconstruction-lowpass ordering.
constexpr double kHaar[] = {
    0.70710678118654757,
    0.70710678118654757,
};

constexpr double kDb2[] = {
    0.48296291314453416,
    0.83651630373780794,
    0.22414386804201339,
    -0.12940952255126037,
};

constexpr double kDb3[] = {
    0.33267055295008263,
    0.80689150931109255,
    0.45987750211849154,
    -0.13501102001025458,
    -0.085441273882026658,
    0.035226291885709533,
};

constexpr double kDb4[] = {
    0.23037781330889651,
    0.71484657055291567,
    0.63088076792985892,
    -0.027983769416859854,
    -0.18703481171909309,
    0.030841381835560764,
    0.032883011666885197,
    -0.010597401785069032,
};

constexpr double kDb5[] = {
    0.16010239797419293,
    0.60382926979718965,
    0.72430852843777294,
    0.13842814590132074,
    -0.24229488706638203,
    -0.032244869584638375,
    0.077571493840045719,
    -0.0062414902127982744,
    -0.012580751999081999,
    0.0033357252854737712,
};

constexpr double kDb6[] = {
    0.11154074335010947,
    0.49462389039845306,
    0.75113390802109536,
    0.31525035170919763,
    -0.22626469396543983,
    -0.12976686756726194,
    0.097501605587323043,
    0.027522865530305727,
    -0.03158203931748603,
    0.00055384220116149613,
    0.0047772575109455108,
    -0.0010773010853084796,
};

constexpr double kDb7[] = {
    0.077852054085009184,
    0.39653931948191729,
    0.72913209084623509,
    0.46978228740519312,
    -0.14390600392856498,
    -0.22403618499387498,
    0.071309219266830259,
    0.080612609151083078,
    -0.038029936935014413,
    -0.016574541630666881,
    0.01255099855609984,
    0.00042957797292136651,
    -0.0018016407040474908,
    0.00035371379997452024,
};

constexpr double kDb8[] = {
    0.054415842243104008,
    0.31287159091429995,
    0.67563073629728976,
    0.58535468365420673,
    -0.015829105256349306,
    -0.28401554296154691,
    0.00047248457391328279,
    0.12874742662047847,
    -0.017369301001807547,
    -0.044088253930794755,
    0.013981027917398282,
    0.0087460940474057766,
    -0.0048703529934515741,
    -0.00039174037337694705,
    0.00067544940645056933,
    -0.00011747678412476953,
};

constexpr double kDb9[] = {
    0.038077947363878345,
    0.24383467461259034,
    0.60482312369011115,
    0.65728807805130052,
    0.13319738582500756,
    -0.29327378327917492,
    -0.096840783222976456,
    0.14854074933810638,
    0.03072568147933338,
    -0.067632829061329974,
    0.00025094711483145197,
    0.022361662123679096,
    -0.0047232047577513972,
    -0.0042815036824634303,
    0.0018476468830562265,
    0.00023038576352319597,
    -0.00025196318894271012,
    3.9347320316271603e-05,
};

constexpr double kDb10[] = {
    0.026670057900555554,
    0.1881768000776915,
    0.52720118893172563,
    0.68845903945360354,
    0.28117234366057747,
    -0.24984642432731538,
    -0.19594627437737705,
    0.12736934033579325,
    0.093057364603572348,
    -0.071394147166397082,
    -0.029457536821875813,
    0.033212674059341002,
    0.0036065535669561697,
    -0.010733175483330575,
    0.0013953517470529011,
    0.0019924052951850561,
    -0.00068585669495971162,
    -0.00011646685512928545,
    9.3588670320069592e-05,
    -1.3264202894521244e-05,
};

constexpr double kSym2[] = {
    0.48296291314469025,
    0.83651630373746899,
    0.22414386804185735,
    -0.12940952255092145,
};

constexpr double kSym3[] = {
    0.33267055295095688,
    0.80689150931333875,
    0.45987750211933132,
    -0.13501102001039084,
    -0.085441273882241486,
    0.035226291882100656,
};

constexpr double kSym4[] = {
    0.032223100604042702,
    -0.012603967262037833,
    -0.099219543576847216,
    0.29785779560527736,
    0.80373875180591614,
    0.49761866763201545,
    -0.02963552764599851,
    -0.075765714789273325,
};

constexpr double kSym5[] = {
    0.019538882735286728,
    -0.021101834024758855,
    -0.17532808990845047,
    0.016602105764522319,
    0.63397896345821192,
    0.72340769040242059,
    0.1993975339773936,
    -0.039134249302383094,
    0.029519490925774643,
    0.027333068345077982,
};

constexpr double kSym6[] = {
    -0.007800708325034148,
    0.0017677118642428036,
    0.044724901770665779,
    -0.021060292512300564,
    -0.072637522786462516,
    0.3379294217276218,
    0.787641141030194,
    0.49105594192674662,
    -0.048311742585632998,
    -0.11799011114819057,
    0.0034907120842174702,
    0.015404109327027373,
};

constexpr double kSym7[] = {
    0.010268176708511255,
    0.0040102448715336634,
    -0.10780823770381774,
    -0.14004724044296152,
    0.28862963175151463,
    0.76776431700316405,
    0.5361019170917628,
    0.017441255086855827,
    -0.049552834937127255,
    0.067892693501372697,
    0.03051551316596357,
    -0.01263630340325193,
    -0.0010473848886829163,
    0.0026818145682578781,
};

constexpr double kSym8[] = {
    0.0018899503327594609,
    -0.0003029205147213668,
    -0.014952258337048231,
    0.0038087520138906151,
    0.049137179673607506,
    -0.027219029917056003,
    -0.051945838107709037,
    0.3644418948353314,
    0.77718575170052351,
    0.48135965125837221,
    -0.061273359067658524,
    -0.14329423835080971,
    0.0076074873249176054,
    0.031695087811492981,
    -0.00054213233179114812,
    -0.0033824159510061256,
};

constexpr double kSym9[] = {
    0.0010694900329086053,
    -0.00047315449868008311,
    -0.010264064027633142,
    0.0088592674934004842,
    0.06207778930288603,
    -0.018233770779395985,
    -0.19155083129728512,
    0.035272488035271894,
    0.61733844914093583,
    0.717897082764412,
    0.238760914607303,
    -0.054568958430834071,
    0.00058346274612580684,
    0.03022487885827568,
    -0.01152821020767923,
    -0.013271967781817119,
    0.00061978088898558676,
    0.0014009155259146807,
};

constexpr double kSym10[] = {
    -0.00045932942100465878,
    5.7036083618494284e-05,
    0.0045931735853118284,
    -0.00080435893201654491,
    -0.02035493981231129,
    0.0057649120335819086,
    0.049994972077376687,
    -0.0319900568824278,
    -0.035536740473817552,
    0.38382676106708546,
    0.7695100370211071,
    0.47169066693843925,
    -0.070880535783243853,
    -0.15949427888491757,
    0.011609893903711381,
    0.045927239231092203,
    -0.0014653825813050513,
    -0.0086412992770224222,
    9.5632670722894754e-05,
    0.00077015980911449011,
};

constexpr double kCoif1[] = {
    -0.07273261951252645,
    0.33789766245748182,
    0.85257202021160039,
    0.38486484686485778,
    -0.07273261951252645,
    -0.015655728135791993,
};

constexpr double kCoif2[] = {
    0.016387336463203641,
    -0.041464936786871777,
    -0.067372554723725595,
    0.38611006682276289,
    0.81272363544941351,
    0.41700518442323908,
    -0.076488599078280761,
    -0.059434418646431092,
    0.02368017194684777,
    0.0056114348193688343,
    -0.0018232088709110323,
    -0.00072054944552034698,
};

constexpr double kCoif3[] = {
    -0.0037935128643808019,
    0.0077825964256727463,
    0.023452696142077168,
    -0.065771911281469364,
    -0.061123390002972552,
    0.40517690240911824,
    0.79377722262608719,
    0.42848347637737,
    -0.071799821619154838,
    -0.082301927106299827,
    0.034555027573297738,
    0.015880544863669452,
    -0.0090079761367306242,
    -0.0025745176881367972,
    0.0011175187708306303,
    0.00046621695982040288,
    -7.0983302506379004e-05,
    -3.4599773197272781e-05,
};

constexpr double kCoif4[] = {
    0.00089231390253700297,
    -0.001629492425226786,
    -0.0073461679362680507,
    0.016068947131575029,
    0.02668230466960483,
    -0.081266710249193727,
    -0.056077319603569258,
    0.41530842700068227,
    0.78223893442428261,
    0.43438603311435653,
    -0.066627472366817167,
    -0.096220424535952642,
    0.039334422605589149,
    0.025082253337949612,
    -0.015211728187697211,
    -0.0056582838001308835,
    0.0037514346971460866,
    0.0012665610789256603,
    -0.00058902022463321654,
    -0.00025997433712225682,
    6.2338854312787192e-05,
    3.1229861599195265e-05,
    -3.259647940030751e-06,
    -1.7849909144933469e-06,
};

constexpr double kCoif5[] = {
    -0.000212081862067494,
    0.00035857774116175768,
    0.0021782943778456947,
    -0.0041593126275786402,
    -0.010131584846900276,
    0.023408322118927783,
    0.028169744270532353,
    -0.091921588060086087,
    -0.052046670253554764,
    0.42157126673075435,
    0.77429362286032744,
    0.43798230665916338,
    -0.06203775157498196,
    -0.10556315130733723,
    0.041287530472117834,
    0.032674799467057355,
    -0.019758391600965465,
    -0.0091595073386761625,
    0.0067615202206204169,
    0.0024315754425382886,
    -0.0016616273039298788,
    -0.00063755892612588115,
    0.00030185794166824478,
    0.00014035632812373243,
    -4.1219861924265501e-05,
    -2.1270221672515614e-05,
    3.7007277113394796e-06,
    2.0612203985788783e-06,
    -1.6237995172048338e-07,
    -9.6040101127678941e-08,
};

std::span<const double> Lookup(const ClassicalWaveletId& id) {
  switch (id.family) {
    case WaveletFamily::kHaar:
      if (id.order == 1) return kHaar;
      break;
    case WaveletFamily::kDaubechies:
      switch (id.order) {
        case 2: return kDb2;
        case 3: return kDb3;
        case 4: return kDb4;
        case 5: return kDb5;
        case 6: return kDb6;
        case 7: return kDb7;
        case 8: return kDb8;
        case 9: return kDb9;
        case 10: return kDb10;
      }
      break;
    case WaveletFamily::kSymlet:
      switch (id.order) {
        case 2: return kSym2;
        case 3: return kSym3;
        case 4: return kSym4;
        case 5: return kSym5;
        case 6: return kSym6;
        case 7: return kSym7;
        case 8: return kSym8;
        case 9: return kSym9;
        case 10: return kSym10;
      }
      break;
    case WaveletFamily::kCoiflet:
      switch (id.order) {
        case 1: return kCoif1;
        case 2: return kCoif2;
        case 3: return kCoif3;
        case 4: return kCoif4;
        case 5: return kCoif5;
      }
      break;
  }
  return {};
}

std::string_view Prefix(WaveletFamily family) {
  switch (family) {
    case WaveletFamily::kHaar: return "haar";
    case WaveletFamily::kDaubechies: return "db";
    case WaveletFamily::kSymlet: return "sym";
    case WaveletFamily::kCoiflet: return "coif";
  }
  return "";
}

}  // namespace

bool IsValid(const ClassicalWaveletId& id) { return !Lookup(id).empty(); }

std::string_view FamilyName(WaveletFamily family) {
  switch (family) {
    case WaveletFamily::kHaar: return "Haar";
    case WaveletFamily::kDaubechies: return "Daubechies";
    case WaveletFamily::kSymlet: return "Symlet";
    case WaveletFamily::kCoiflet: return "Coiflet";
  }
  return "";
}

std::string ShortName(const ClassicalWaveletId& id) {
  if (id.family == WaveletFamily::kHaar) return "haar";
  return std::string(Prefix(id.family)) + std::to_string(id.order);
}

ClassicalWaveletId ParseWaveletName(std::string_view name) {
  if (name == "haar" || name == "db1") return {WaveletFamily::kHaar, 1};
  for (auto family : {WaveletFamily::kDaubechies, WaveletFamily::kSymlet,
                      WaveletFamily::kCoiflet}) {
    const std::string_view prefix = Prefix(family);
    if (!name.starts_with(prefix)) continue;
    const std::string_view digits = name.substr(prefix.size());
    int order = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), order);
    if (ec != std::errc() || end != digits.data() + digits.size()) break;
    ClassicalWaveletId id{family, order};
    if (IsValid(id)) return id;
    break;
  }
  throw LookupError("unknown classical wavelet '" + std::string(name) + "'");
}

ScalingFilter ClassicalFilter(const ClassicalWaveletId& id) {
  const auto taps = Lookup(id);
  if (taps.empty()) {
    throw LookupError("no classical wavelet " +
                      std::string(FamilyName(id.family)) + "(" +
                      std::to_string(id.order) + ")");
  }
  return ScalingFilter(std::vector<double>(taps.begin(), taps.end()));
}

const std::vector<ClassicalWaveletId>& ClassicalWaveletIds() {
  static const std::vector<ClassicalWaveletId> ids = [] {
    std::vector<ClassicalWaveletId> v{{WaveletFamily::kHaar, 1}};
    for (int o = 2; o <= 10; ++o) v.push_back({WaveletFamily::kDaubechies, o});
    for (int o = 2; o <= 10; ++o) v.push_back({WaveletFamily::kSymlet, o});
    for (int o = 1; o <= 5; ++o) v.push_back({WaveletFamily::kCoiflet, o});
    return v;
  }();
  return ids;
}

}  // namespace wavelearn

#include "hasym/dop853.hpp"

namespace hasym::ode::detail {

namespace {
Real q(const char* s) { return Real(s); }
}  // namespace

Dop853Tableau::Dop853Tableau() {
  c2 = q("0.526001519587677318785587544488E-01");
  c3 = q("0.789002279381515978178381316732E-01");
  c4 = q("0.118350341907227396726757197510E+00");
  c5 = q("0.281649658092772603273242802490E+00");
  c6 = Real(1) / 3;
  c7 = q("0.25E+00");
  c8 = Real(4) / 13;
  c9 = Real(127) / 195;
  c10 = q("0.6E+00");
  c11 = Real(6) / 7;
  c14 = q("0.1E+00");
  c15 = q("0.2E+00");
  c16 = Real(7) / 9;
  b1 = q("5.42937341165687622380535766363E-2");
  b6 = q("4.45031289275240888144113950566E0");
  b7 = q("1.89151789931450038304281599044E0");
  b8 = q("-5.8012039600105847814672114227E0");
  b9 = q("3.1116436695781989440891606237E-1");
  b10 = q("-1.52160949662516078556178806805E-1");
  b11 = q("2.01365400804030348374776537501E-1");
  b12 = q("4.47106157277725905176885569043E-2");
  bhh1 = q("0.244094488188976377952755905512E+00");
  bhh2 = q("0.733846688281611857341361741547E+00");
  bhh3 = q("0.220588235294117647058823529412E-01");
  er1 = q("0.1312004499419488073250102996E-01");
  er6 = q("-0.1225156446376204440720569753E+01");
  er7 = q("-0.4957589496572501915214079952E+00");
  er8 = q("0.1664377182454986536961530415E+01");
  er9 = q("-0.3503288487499736816886487290E+00");
  er10 = q("0.3341791187130174790297318841E+00");
  er11 = q("0.8192320648511571246570742613E-01");
  er12 = q("-0.2235530786388629525884427845E-01");
  a21 = q("5.26001519587677318785587544488E-2");
  a31 = q("1.97250569845378994544595329183E-2");
  a32 = q("5.91751709536136983633785987549E-2");
  a41 = q("2.95875854768068491816892993775E-2");
  a43 = q("8.87627564304205475450678981324E-2");
  a51 = q("2.41365134159266685502369798665E-1");
  a53 = q("-8.84549479328286085344864962717E-1");
  a54 = q("9.24834003261792003115737966543E-1");
  a61 = Real(1) / 27;
  a64 = q("1.70828608729473871279604482173E-1");
  a65 = q("1.25467687566822425016691814123E-1");
  a71 = q("3.7109375E-2");
  a74 = q("1.70252211019544039314978060272E-1");
  a75 = q("6.02165389804559606850219397283E-2");
  a76 = q("-1.7578125E-2");
  a81 = q("3.70920001185047927108779319836E-2");
  a84 = q("1.70383925712239993810214054705E-1");
  a85 = q("1.07262030446373284651809199168E-1");
  a86 = q("-1.53194377486244017527936158236E-2");
  a87 = q("8.27378916381402288758473766002E-3");
  a91 = q("6.24110958716075717114429577812E-1");
  a94 = q("-3.36089262944694129406857109825E0");
  a95 = q("-8.68219346841726006818189891453E-1");
  a96 = q("2.75920996994467083049415600797E1");
  a97 = q("2.01540675504778934086186788979E1");
  a98 = q("-4.34898841810699588477366255144E1");
  a101 = q("4.77662536438264365890433908527E-1");
  a104 = q("-2.48811461997166764192642586468E0");
  a105 = q("-5.90290826836842996371446475743E-1");
  a106 = q("2.12300514481811942347288949897E1");
  a107 = q("1.52792336328824235832596922938E1");
  a108 = q("-3.32882109689848629194453265587E1");
  a109 = q("-2.03312017085086261358222928593E-2");
  a111 = q("-9.3714243008598732571704021658E-1");
  a114 = q("5.18637242884406370830023853209E0");
  a115 = q("1.09143734899672957818500254654E0");
  a116 = q("-8.14978701074692612513997267357E0");
  a117 = q("-1.85200656599969598641566180701E1");
  a118 = q("2.27394870993505042818970056734E1");
  a119 = q("2.49360555267965238987089396762E0");
  a1110 = q("-3.0467644718982195003823669022E0");
  a121 = q("2.27331014751653820792359768449E0");
  a124 = q("-1.05344954667372501984066689879E1");
  a125 = q("-2.00087205822486249909675718444E0");
  a126 = q("-1.79589318631187989172765950534E1");
  a127 = q("2.79488845294199600508499808837E1");
  a128 = q("-2.85899827713502369474065508674E0");
  a129 = q("-8.87285693353062954433549289258E0");
  a1210 = q("1.23605671757943030647266201528E1");
  a1211 = q("6.43392746015763530355970484046E-1");
  a141 = q("5.61675022830479523392909219681E-2");
  a147 = q("2.53500210216624811088794765333E-1");
  a148 = q("-2.46239037470802489917441475441E-1");
  a149 = q("-1.24191423263816360469010140626E-1");
  a1410 = q("1.5329179827876569731206322685E-1");
  a1411 = q("8.20105229563468988491666602057E-3");
  a1412 = q("7.56789766054569976138603589584E-3");
  a1413 = q("-8.298E-3");
  a151 = q("3.18346481635021405060768473261E-2");
  a156 = q("2.83009096723667755288322961402E-2");
  a157 = q("5.35419883074385676223797384372E-2");
  a158 = q("-5.49237485713909884646569340306E-2");
  a1511 = q("-1.08347328697249322858509316994E-4");
  a1512 = q("3.82571090835658412954920192323E-4");
  a1513 = q("-3.40465008687404560802977114492E-4");
  a1514 = q("1.41312443674632500278074618366E-1");
  a161 = q("-4.28896301583791923408573538692E-1");
  a166 = q("-4.69762141536116384314449447206E0");
  a167 = q("7.68342119606259904184240953878E0");
  a168 = q("4.06898981839711007970213554331E0");
  a169 = q("3.56727187455281109270669543021E-1");
  a1613 = q("-1.39902416515901462129418009734E-3");
  a1614 = q("2.9475147891527723389556272149E0");
  a1615 = q("-9.15095847217987001081870187138E0");
  d41 = q("-0.84289382761090128651353491142E+01");
  d46 = q("0.56671495351937776962531783590E+00");
  d47 = q("-0.30689499459498916912797304727E+01");
  d48 = q("0.23846676565120698287728149680E+01");
  d49 = q("0.21170345824450282767155149946E+01");
  d410 = q("-0.87139158377797299206789907490E+00");
  d411 = q("0.22404374302607882758541771650E+01");
  d412 = q("0.63157877876946881815570249290E+00");
  d413 = q("-0.88990336451333310820698117400E-01");
  d414 = q("0.18148505520854727256656404962E+02");
  d415 = q("-0.91946323924783554000451984436E+01");
  d416 = q("-0.44360363875948939664310572000E+01");
  d51 = q("0.10427508642579134603413151009E+02");
  d56 = q("0.24228349177525818288430175319E+03");
  d57 = q("0.16520045171727028198505394887E+03");
  d58 = q("-0.37454675472269020279518312152E+03");
  d59 = q("-0.22113666853125306036270938578E+02");
  d510 = q("0.77334326684722638389603898808E+01");
  d511 = q("-0.30674084731089398182061213626E+02");
  d512 = q("-0.93321305264302278729567221706E+01");
  d513 = q("0.15697238121770843886131091075E+02");
  d514 = q("-0.31139403219565177677282850411E+02");
  d515 = q("-0.93529243588444783865713862664E+01");
  d516 = q("0.35816841486394083752465898540E+02");
  d61 = q("0.19985053242002433820987653617E+02");
  d66 = q("-0.38703730874935176555105901742E+03");
  d67 = q("-0.18917813819516756882830838328E+03");
  d68 = q("0.52780815920542364900561016686E+03");
  d69 = q("-0.11573902539959630126141871134E+02");
  d610 = q("0.68812326946963000169666922661E+01");
  d611 = q("-0.10006050966910838403183860980E+01");
  d612 = q("0.77771377980534432092869265740E+00");
  d613 = q("-0.27782057523535084065932004339E+01");
  d614 = q("-0.60196695231264120758267380846E+02");
  d615 = q("0.84320405506677161018159903784E+02");
  d616 = q("0.11992291136182789328035130030E+02");
  d71 = q("-0.25693933462703749003312586129E+02");
  d76 = q("-0.15418974869023643374053993627E+03");
  d77 = q("-0.23152937917604549567536039109E+03");
  d78 = q("0.35763911791061412378285349910E+03");
  d79 = q("0.93405324183624310003907691704E+02");
  d710 = q("-0.37458323136451633156875139351E+02");
  d711 = q("0.10409964950896230045147246184E+03");
  d712 = q("0.29840293426660503123344363579E+02");
  d713 = q("-0.43533456590011143754432175058E+02");
  d714 = q("0.96324553959188282948394950600E+02");
  d715 = q("-0.39177261675615439165231486172E+02");
  d716 = q("-0.14972683625798562581422125276E+03");
}

const Dop853Tableau& dop853_tableau() {
  static const Dop853Tableau tableau;
  return tableau;
}

}  // namespace hasym::ode::detail

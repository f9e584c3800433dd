#pragma once

#include "lerch/core.hpp"

namespace lerch::testing {

struct phi_ref {
  cplx z, s, v, value;
  double tol;
};

// generated: mpmath lerchphi at 30 significant digits
inline const phi_ref phi_reference_sweep[] = {
    {{0.71616822433059646, 0.23007017307868197}, {2.3222274120414435, -0.45713769156879369}, {1.6604009251516658, -0.058391135848777975}, {0.35089195416415042139, 0.19826694433745598034}, 1.0e-11},  // disk
    {{-0.77619617039966238, -0.082549126201760234}, {-2.7074814223761203, -0.10675924856641417}, {1.6988494280143935, -0.10882322077535617}, {0.63096923713258556976, -0.33593394771058759929}, 1.0e-11},  // disk
    {{-0.45121526918609556, -0.44770630633527603}, {-2.5295402896468291, 0.19341818219204843}, {0.82359559279504735, 0.34224664822409212}, {-0.18487492258316085003, 0.10957912219415649746}, 1.0e-11},  // disk
    {{0.27642488485112554, -0.060739924680089569}, {0.13212212410808766, -0.03827319899353876}, {0.794851977518099, -0.27138459859910091}, {1.380264993046096178, -0.049433990670145762369}, 1.0e-11},  // disk
    {{0.22487138327660128, -0.33629732975972743}, {3.9137176356278385, 0.9188297705128281}, {1.6154565957538682, -0.046111644856025369}, {0.13768099109229339772, -0.05702572744773500707}, 1.0e-11},  // disk
    {{0.3844669445900889, -0.67080704562628257}, {-2.5481682197299316, -0.97994996777706023}, {2.2386635680508356, -0.20844224723501609}, {1.4135388292338446625, -20.258154889361886575}, 1.0e-11},  // disk
    {{0.26075233220740651, -0.38420197843707127}, {-2.376049122830842, -0.5423669544838734}, {0.31247490739847783, 0.012843289798548985}, {-1.7867237591739140168, -2.0844014845368539213}, 1.0e-11},  // disk
    {{0.25807212539544178, -0.026483825261948452}, {3.9616093750178809, 0.20170781315984931}, {0.60555278201328344, -0.097707557952279422}, {5.0322367869316453337, 4.4895129977543835054}, 1.0e-11},  // disk
    {{-0.1774451855757577, 0.20798233677805078}, {-0.046000773198199951, 0.19352768120657826}, {0.20658383451796475, 0.1309116149195616}, {0.81566616464341867854, 0.46183609669326758373}, 1.0e-11},  // disk
    {{-0.19091349567658214, -0.072961536943406693}, {2.3116119861414877, -0.34545723241382054}, {1.3070283410296628, -0.23105724805594338}, {0.4654723055267540599, 0.24464687709147123207}, 1.0e-11},  // disk
    {{0.13465538394818183, 0.028766126315224658}, {1.4604174135326993, 0.59951590403184851}, {0.92780902128360332, -0.090167256401888274}, {1.083028862321219421, 0.18421291867720951396}, 1.0e-11},  // disk
    {{0.32480958560653039, -0.55926467079954201}, {-2.4727838613511528, -0.22031942608469346}, {1.9822314329979485, -0.033843587412216991}, {-2.4529402229091621379, -7.6324594673707659709}, 1.0e-11},  // disk
    {{-0.087049238875354248, 0.87513811700518829}, {-2.4313420649110213, 0.30999621477008521}, {1.7842425163325486, -0.0047484829459328859}, {-0.39019790556641092971, 1.5696298120861191805}, 1.0e-11},  // disk
    {{0.32675411645212438, -0.86638112830660585}, {-1.8612183901471573, -0.61574709690448381}, {2.0285595463463393, -0.26548280674037572}, {-0.67594857096891569626, -4.7603180787456214063}, 1.0e-11},  // disk
    {{0.11497116941124023, 0.24894028998704248}, {2.9832078758021714, 0.14457566918903408}, {0.33688587651196417, -0.082494714612450448}, {14.701065298221463351, 17.487811673731304296}, 1.0e-11},  // disk
    {{0.50463079489143292, 0.0062139797036457672}, {2.8489532885487128, -0.39180882819037999}, {2.7160646509053903, -0.36990742367620444}, {0.053686734910861802494, 0.054330834967547446401}, 1.0e-11},  // disk
    {{-0.61191371373487025, 0.74964475592513469}, {0.12571472491709446, 0}, {1.4525775592004602, 0}, {0.50940370610394170026, 0.22281913722275639711}, 1.0e-10},  // rim
    {{-0.76569869624695042, 0.58306687908561883}, {1.297231598840936, 0}, {1.2630870070457227, 0}, {0.53595458684676688943, 0.092310841584580943797}, 1.0e-10},  // rim
    {{0.67184322120500739, -0.67782750040824846}, {2.781105705281913, 0}, {0.86859430058957865, 0}, {1.5719351177652445273, -0.17391107084833859475}, 1.0e-10},  // rim
    {{-0.91352514144983599, -0.35404724857651659}, {1.7898435526194989, 0}, {1.0401490163202478, 0}, {0.74681251193742714811, -0.049868506274872152761}, 1.0e-10},  // rim
    {{-0.15273190456051636, -0.97659640525690206}, {-0.98809055189781869, 0}, {0.52108912473085844, 0}, {-0.16433703448540151748, -0.23136710132165130838}, 1.0e-10},  // rim
    {{-0.81833316622693342, -0.55852315325396451}, {0.62290200242001514, 0}, {1.3351396835159279, 0}, {0.51106571652492893687, -0.11659420003261015963}, 1.0e-10},  // rim
    {{0.80794170955901556, 0.58926241518940892}, {0.87270632825208949, 0.22587703276338877}, {1.3290310625148822, 0}, {1.0103336863127763134, 0.71178188418462895459}, 1.0e-09},  // circle_pos
    {{0.95802490518987948, -0.28668498571763812}, {3.1307231534680779, -0.53697230688533704}, {0.83319111699251835, 0}, {1.9776200829318673069, -0.18120279126117974644}, 1.0e-09},  // circle_pos
    {{0.63503271607790324, 0.77248524226079629}, {3.1746584353093121, -0.011441168192924178}, {1.9922285874574241, 0}, {0.12140058950661426762, 0.036070757154559159041}, 1.0e-09},  // circle_pos
    {{0.82083511793816366, 0.5711652205443194}, {2.4736736936123749, 0.53828949515030733}, {1.3122828494175216, 0}, {0.66962510945878284119, 0.018594348137307082497}, 1.0e-09},  // circle_pos
    {{-0.78825644626679714, 0.61534687365650931}, {2.7626226469134565, 0.28151493463449206}, {0.37578050780873817, 0}, {14.085350304969393775, 4.2771378880349235629}, 1.0e-09},  // circle_pos
    {{0.7891757944178639, -0.61416737580641112}, {1.8366769912315832, 0.40758875765612157}, {0.94028774714473395, 0}, {1.1607399591706437647, -0.32837313267980133835}, 1.0e-09},  // circle_pos
    {{-0.98324730422857398, 0.18227654464368695}, {0.84035153918465189, 0.55976295098710371}, {0.81485623538151941, 0}, {0.82481110343023134046, 0.26219559892681154611}, 1.0e-09},  // circle_pos
    {{-0.34946589957066881, -0.936949083481735}, {0.61571513595005245, -0.065626302347048693}, {0.40268276117827861, 0}, {1.3300923237949979772, -0.50546220653355078412}, 1.0e-09},  // circle_pos
    {{-0.8392515271079658, -0.54374339007195971}, {0.48874349620141472, 0.078416168046413937}, {1.3923393844005398, 0}, {0.49241183654495424005, -0.11950549730824873429}, 1.0e-09},  // circle_pos
    {{0.96086165150148695, -0.27702867482236393}, {2.7097316835055474, -0.37117777309653677}, {2.1075765309282515, 0}, {0.21743813895693669958, 0.02285044304655606609}, 1.0e-09},  // circle_pos
    {{0.91118988680907109, -0.41198663834749805}, {1.8624827808130009, -0.11460895229069984}, {0.7493418649877247, 0}, {2.1172111514323170844, -0.44710380815184141978}, 1.0e-09},  // circle_pos
    {{-0.12832560069415558, -0.99173209094315595}, {0.99093264088685662, -0.56015142197547008}, {1.1070447550926927, 0}, {0.78434876566330724579, -0.34057242002987020424}, 1.0e-09},  // circle_pos
    {{-0.33908108826932881, 0.94075715016049044}, {-0.57865062242837584, -0.29850494257475835}, {2.1782854223649641, 0}, {0.50619881677692779576, 0.6153584961967607514}, 5.0e-08},  // circle_neg
    {{-0.79447745285359594, 0.60729364965168386}, {-1.801496955284259, -0.19645147509303096}, {0.72275114699503606, 0}, {-0.094150962938829727, -0.0034309703747551611314}, 5.0e-08},  // circle_neg
    {{0.91529364409772107, -0.40278722059458938}, {-1.9059349644201902, -0.094489629462296221}, {0.63081818573830173, 0}, {-14.958386874040522585, 23.04789937013378065}, 5.0e-08},  // circle_neg
    {{-0.20815557314598448, -0.97809573016564522}, {-1.8698318006641528, -0.2987943795140221}, {2.0378967900145528, 0}, {0.62038717187331904324, -1.4185512344373978344}, 5.0e-08},  // circle_neg
    {{0.11145248901970371, -0.99376976342174594}, {-1.0784714412384249, -0.18748747642137198}, {1.8640623922924799, 0}, {0.44271165969674658447, -1.1645082698032060975}, 5.0e-08},  // circle_neg
    {{0.75617550560935198, -0.6543688598309374}, {-1.913170366256584, 0.22726500078130041}, {1.2250695512422196, 0}, {-2.327437484748394958, 2.4799938833037220576}, 5.0e-08},  // circle_neg
    {{0.88565230830210906, -0.4643489946141221}, {-1.1035911808782572, 0.44348293846204012}, {0.36738347420797124, 0}, {-1.9587334001000413775, 1.1937948859164899673}, 5.0e-08},  // circle_neg
    {{-0.98453386893387218, 0.17519435185559212}, {-1.8816036772085409, 0.24265904141068595}, {0.98357338940977246, 0}, {0.0022629654765217123089, 0.080108508830430108505}, 5.0e-08},  // circle_neg
    {{-0.98696478301965385, -0.16093637587247797}, {-1.7128551365074083, -0.4218789515104433}, {1.9944033450612171, 0}, {0.95805413198678801567, -0.022123185921868283171}, 5.0e-08},  // circle_neg
    {{0.3006703283536184, -0.95372813403386991}, {-0.10195375379390814, -0.050122988617124165}, {0.98333056265593666, 0}, {0.45303347645665437149, -0.72949943751024115546}, 5.0e-08},  // circle_neg
    {{0.054777865137267623, -0.99849856559286221}, {-1.3250103123390193, -0.15455853157939281}, {2.0953693534041959, 0}, {0.54923457025502320228, -1.3999839927670931772}, 5.0e-08},  // circle_neg
    {{0.48502324956835213, 0.87450125636167952}, {-1.4911542010728138, -0.37076364877503865}, {0.37366206031625887, 0}, {-0.51750916237252519991, -0.37601171850901426996}, 5.0e-08},  // circle_neg
    {{-1, 0}, {3.4350017068544778, -0.086351194101836004}, {0.93283802676500827, 0}, {1.1843642871045545473, -0.011938794677371656131}, 1.0e-11},  // minus_one
    {{-1, 0}, {-0.38170305715681963, -0.4652633711861045}, {1.1596696292981095, 0}, {0.45585350916610450911, -0.074529586794933336269}, 1.0e-11},  // minus_one
    {{-1, 0}, {2.9754773231247542, 0.036281963065297962}, {2.0161618640541139, 0}, {0.097365539414579524435, -0.0021682331561441118423}, 1.0e-11},  // minus_one
    {{-1, 0}, {-1.4149486630999326, -0.64502886748067101}, {2.1321155303911503, 0}, {0.96220592414086125732, 0.25709634488163524146}, 1.0e-11},  // minus_one
    {{-1, 0}, {0.5034743572414202, 0.65100399076607562}, {2.3017403250818358, 0}, {0.33438242342507973337, -0.1510999053578923057}, 1.0e-11},  // minus_one
    {{-1, 0}, {1.3300812696966329, 0.91468027164899768}, {0.39967616712323351, 0}, {1.8093588961442652607, 2.5886606605216595511}, 1.0e-11},  // minus_one
    {{0.70213519284926951, -0.71204365804529091}, {2.2641884878817704, 0}, {1.0317280747626987, 0.40037578175066979}, {0.51424961348482256529, -0.84164555650199968095}, 1.0e-09},  // circle_cv
    {{-0.47024413184231001, -0.88253637685246278}, {0.74871616995580759, 0}, {0.67992397139772032, -0.0058239742206049883}, {0.97368662124553995163, -0.28175345437547161254}, 1.0e-09},  // circle_cv
    {{0.83806943296120373, -0.54556358523648407}, {2.0716406466438251, 0}, {0.99115062854031766, -0.18338843021933815}, {1.1258817385208923501, 0.12123338647398096413}, 1.0e-09},  // circle_cv
    {{-0.89429105254200192, 0.44748576887239477}, {1.4149561314109274, 0}, {1.1313391110189635, 0.1257743738062761}, {0.6149137656732069912, -0.041445875360262077192}, 1.0e-09},  // circle_cv
    {{-0.96816132531645183, -0.2503270823572461}, {1.2265108319503213, 0}, {1.4114498632917689, -0.15041337153143886}, {0.44148604954447490112, 0.033296323503703852131}, 1.0e-09},  // circle_cv
    {{0.40655075457763634, -0.91362819787501881}, {1.1076785904006725, 0}, {0.76690429410665806, 0.19906075460002259}, {1.0694620499793976443, -0.87678910685428224081}, 1.0e-09},  // circle_cv
};

}  // namespace lerch::testing

#pragma once

// 2p = 6 variable-coefficient second-derivative closure:
//   A^(c) = D^T C H D + sum_k c_k [ gamma4 s4_k s4_k^T + ... ] + closure blocks,
// with s4 the centered fourth difference.  The closure blocks below were
// solved (and are test-verified) for: symmetry, A*1 = 0, boundary rows exact
// to the third-order monomial set, per-node positive semidefiniteness, and
// the borrowing inequality with the tabulated beta.

namespace hsbp::closure6 {

inline constexpr double kGamma4 = 1.0 / 80.0;
inline constexpr double kGamma5 = 0;
inline constexpr double kGamma6 = 0;
inline constexpr int kClosureSize = 9;

inline constexpr double kClosure[kClosureSize][kClosureSize][kClosureSize] = {
    {  // node 0
        {0.0050397174249587322, -0.014862995640034852, 0.009889075986883893, 0.0071055072331147398, -0.0076931320799893243, -8.3392293256138398e-05, -0.0019714223003880291, 0.0038267877815102796, -0.0012501461127990303},
        {-0.014862995640034852, 0.044436231510737105, -0.031180364138083429, -0.019460921843516176, 0.023948588178684241, -0.0005181982021124214, 0.0031807623982299453, -0.0083641442859004635, 0.0028210420219960414},
        {0.009889075986883893, -0.031180364138083429, 0.026407481509722275, 0.0074306704671137898, -0.016429648047944018, 0.00078674691476602113, 0.0036922394892956183, -0.00047442784570607969, -0.00012177433604843897},
        {0.0071055072331147398, -0.019460921843516176, 0.0074306704671137898, 0.022623906680034913, -0.025003441204393483, 0.0083851476278999047, -0.0031087634732184484, 0.0027546876760455945, -0.00072679316308143528},
        {-0.0076931320799893243, 0.023948588178684241, -0.016429648047944018, -0.025003441204393483, 0.048906487010439842, -0.024383764689306885, -0.011321148748542358, 0.017667677211391525, -0.0056916176303403185},
        {-8.3392293256138398e-05, -0.0005181982021124214, 0.00078674691476602113, 0.0083851476278999047, -0.024383764689306885, 0.020755549963150283, 0.001600404866363243, -0.010284094695621282, 0.0037416005081165014},
        {-0.0019714223003880291, 0.0031807623982299453, 0.0036922394892956183, -0.0031087634732184484, -0.011321148748542358, 0.001600404866363243, 0.027233534368013033, -0.027087266274823614, 0.0077816596750699702},
        {0.0038267877815102796, -0.0083641442859004635, -0.00047442784570607969, 0.0027546876760455945, 0.017667677211391525, -0.010284094695621282, -0.027087266274823614, 0.031363944192135264, -0.0094031637590314687},
        {-0.0012501461127990303, 0.0028210420219960414, -0.00012177433604843897, -0.00072679316308143528, -0.0056916176303403185, 0.0037416005081165014, 0.0077816596750699702, -0.0094031637590314687, 0.0028491927961187026},
    },
    {  // node 1
        {0.0050397174408228253, -0.014862995658449797, 0.009889075994797606, 0.0071055072524313905, -0.0076931320965799464, -8.3392303766857714e-05, -0.0019714223000605168, 0.0038267877846431871, -0.0012501461138377263},
        {-0.014862995658449797, 0.044436231497641726, -0.031180364137407653, -0.019460921827592067, 0.023948588187274411, -0.0005181981984859423, 0.0031807623988005323, -0.0083641442767283074, 0.0028210420149475442},
        {0.009889075994797606, -0.031180364137407653, 0.026407481491445971, 0.0074306704702988644, -0.016429648045722871, 0.00078674690204697429, 0.0036922394846481874, -0.00047442782805990654, -0.00012177433204661131},
        {0.0071055072524313905, -0.019460921827592067, 0.0074306704702988644, 0.022623906662826224, -0.025003441197321365, 0.0083851476136902591, -0.0031087634791570691, 0.0027546876697596115, -0.00072679316493501334},
        {-0.0076931320965799464, 0.023948588187274411, -0.016429648045722871, -0.025003441197321365, 0.048906487067543664, -0.024383764739958517, -0.011321148750716267, 0.017667677219663142, -0.0056916176441812807},
        {-8.3392303766857714e-05, -0.0005181981984859423, 0.00078674690204697429, 0.0083851476136902591, -0.024383764739958517, 0.020755550058789943, 0.001600404849678469, -0.010284094694175823, 0.0037416005121826109},
        {-0.0019714223000605168, 0.0031807623988005323, 0.0036922394846481874, -0.0031087634791570691, -0.011321148750716267, 0.001600404849678469, 0.027233534377189617, -0.027087266275685563, 0.0077816596953035532},
        {0.0038267877846431871, -0.0083641442767283074, -0.00047442782805990654, 0.0027546876697596115, 0.017667677219663142, -0.010284094694175823, -0.027087266275685563, 0.03136394417383432, -0.0094031637732500811},
        {-0.0012501461138377263, 0.0028210420149475442, -0.00012177433204661131, -0.00072679316493501334, -0.0056916176441812807, 0.0037416005121826109, 0.0077816596953035532, -0.0094031637732500811, 0.0028491928058170025},
    },
    {  // node 2
        {0.0050397174422359952, -0.014862995682821203, 0.0098890760076047659, 0.0071055072533338553, -0.0076931320936044819, -8.3392305720873615e-05, -0.0019714222995465143, 0.0038267877978611373, -0.0012501461193426303},
        {-0.014862995682821203, 0.044436231633803294, -0.031180364239133868, -0.019460921850910445, 0.023948588204897685, -0.00051819817973069646, 0.0031807623930954505, -0.0083641443118381668, 0.0028210420326380782},
        {0.0098890760076047659, -0.031180364239133868, 0.026407481652233836, 0.0074306704269318192, -0.016429648056733422, 0.00078674690529530569, 0.0036922394875571248, -0.00047442785394133662, -0.00012177432981397136},
        {0.0071055072533338553, -0.019460921850910445, 0.0074306704269318192, 0.022623906678203725, -0.02500344120349703, 0.0083851476330556469, -0.003108763448368869, 0.0027546876962340002, -0.00072679318498226084},
        {-0.0076931320936044819, 0.023948588204897685, -0.016429648056733422, -0.02500344120349703, 0.048906486993894951, -0.02438376467870652, -0.011321148754589488, 0.017667677193368245, -0.00569161760502931},
        {-8.3392305720873615e-05, -0.00051819817973069646, 0.00078674690529530569, 0.0083851476330556469, -0.02438376467870652, 0.020755549964221784, 0.0016004048609875874, -0.01028409470308022, 0.0037416005036786429},
        {-0.0019714222995465143, 0.0031807623930954505, 0.0036922394875571248, -0.003108763448368869, -0.011321148754589488, 0.0016004048609875874, 0.027233534372203352, -0.027087266278799732, 0.0077816596674616266},
        {0.0038267877978611373, -0.0083641443118381668, -0.00047442785394133662, 0.0027546876962340002, 0.017667677193368245, -0.01028409470308022, -0.027087266278799732, 0.031363944217712471, -0.0094031637575161722},
        {-0.0012501461193426303, 0.0028210420326380782, -0.00012177432981397136, -0.00072679318498226084, -0.00569161760502931, 0.0037416005036786429, 0.0077816596674616266, -0.0094031637575161722, 0.0028491927929056374},
    },
    {  // node 3
        {0.0050397174191469879, -0.014862995632716539, 0.0098890759839536397, 0.0071055072390016436, -0.007693132080626385, -8.3392294795058052e-05, -0.001971422302938842, 0.0038267877789242071, -0.0012501461099496819},
        {-0.014862995632716539, 0.044436231532270706, -0.031180364185422624, -0.01946092184134629, 0.02394858818025911, -0.00051819819311241981, 0.0031807624065699558, -0.0083641442788696466, 0.0028210420123674575},
        {0.0098890759839536397, -0.031180364185422624, 0.026407481593930499, 0.007430670454411252, -0.016429648050294954, 0.000786746903052501, 0.003692239476935795, -0.0004744278536319521, -0.00012177432293445552},
        {0.0071055072390016436, -0.01946092184134629, 0.007430670454411252, 0.022623906669436131, -0.025003441200851014, 0.0083851476374380216, -0.0031087634645986552, 0.0027546876800882661, -0.00072679317357974714},
        {-0.007693132080626385, 0.02394858818025911, -0.016429648050294954, -0.025003441200851014, 0.048906487030784027, -0.024383764723945069, -0.011321148750964675, 0.017667677220623196, -0.0056916176249844699},
        {-8.3392294795058052e-05, -0.00051819819311241981, 0.000786746903052501, 0.0083851476374380216, -0.024383764723945069, 0.020755550014204312, 0.0016004048538784382, -0.010284094700889215, 0.0037416005041681225},
        {-0.001971422302938842, 0.0031807624065699558, 0.003692239476935795, -0.0031087634645986552, -0.011321148750964675, 0.0016004048538784382, 0.027233534394181139, -0.027087266293852046, 0.0077816596807885443},
        {0.0038267877789242071, -0.0083641442788696466, -0.0004744278536319521, 0.0027546876800882661, 0.017667677220623196, -0.010284094700889215, -0.027087266293852046, 0.031363944209076823, -0.0094031637614699678},
        {-0.0012501461099496819, 0.0028210420123674575, -0.00012177432293445552, -0.00072679317357974714, -0.0056916176249844699, 0.0037416005041681225, 0.0077816596807885443, -0.0094031637614699678, 0.0028491927955937458},
    },
    {  // node 4
        {0.0050397174334374812, -0.014862995652295617, 0.0098890759929964912, 0.0071055072462960361, -0.0076931320942751902, -8.339229644321579e-05, -0.0019714223007667028, 0.0038267877837674718, -0.0012501461127168057},
        {-0.014862995652295617, 0.044436231525760636, -0.031180364166913256, -0.019460921827935854, 0.023948588188592052, -0.00051819819854616192, 0.0031807623989850184, -0.0083641442834182806, 0.0028210420157710261},
        {0.0098890759929964912, -0.031180364166913256, 0.026407481536370809, 0.0074306704689372912, -0.016429648047571788, 0.00078674689405964159, 0.0036922394842214966, -0.00047442783221361907, -0.00012177432988761236},
        {0.0071055072462960361, -0.019460921827935854, 0.0074306704689372912, 0.022623906636217442, -0.025003441190374235, 0.0083851476335513476, -0.0031087634689233182, 0.0027546876707045314, -0.00072679316847402444},
        {-0.0076931320942751902, 0.023948588188592052, -0.016429648047571788, -0.025003441190374235, 0.048906487048745048, -0.024383764732684322, -0.011321148752906757, 0.017667677214101146, -0.0056916176336266897},
        {-8.339229644321579e-05, -0.00051819819854616192, 0.00078674689405964159, 0.0083851476335513476, -0.024383764732684322, 0.020755550026098343, 0.0016004048652614219, -0.010284094699749802, 0.0037416005084518634},
        {-0.0019714223007667028, 0.0031807623989850184, 0.0036922394842214966, -0.0031087634689233182, -0.011321148752906757, 0.0016004048652614219, 0.027233534350809486, -0.02708726626148197, 0.0077816596848005503},
        {0.0038267877837674718, -0.0083641442834182806, -0.00047442783221361907, 0.0027546876707045314, 0.017667677214101146, -0.010284094699749802, -0.02708726626148197, 0.031363944173591146, -0.009403163765301174},
        {-0.0012501461127168057, 0.0028210420157710261, -0.00012177432988761236, -0.00072679316847402444, -0.0056916176336266897, 0.0037416005084518634, 0.0077816596848005503, -0.009403163765301174, 0.0028491928009825866},
    },
    {  // node 5
        {0.0050397174304117019, -0.014862995646118352, 0.0098890759915590438, 0.0071055072408185739, -0.0076931320918682405, -8.339229268457138e-05, -0.0019714223018471953, 0.003826787781539334, -0.0012501461118103188},
        {-0.014862995646118352, 0.044436231509634376, -0.03118036415397972, -0.019460921827289621, 0.023948588184343526, -0.00051819820088917887, 0.0031807623995708653, -0.008364144280377973, 0.0028210420151058759},
        {0.0098890759915590438, -0.03118036415397972, 0.026407481519984309, 0.007430670475007662, -0.016429648048498936, 0.00078674689472449204, 0.0036922394864867133, -0.00047442783423859067, -0.00012177433104526507},
        {0.0071055072408185739, -0.019460921827289621, 0.007430670475007662, 0.022623906635815157, -0.025003441191570636, 0.0083851476364280898, -0.0031087634707741077, 0.0027546876663250477, -0.00072679316476061335},
        {-0.0076931320918682405, 0.023948588184343526, -0.016429648048498936, -0.025003441191570636, 0.048906487048768363, -0.024383764730831342, -0.011321148753458245, 0.017667677219191935, -0.0056916176360769042},
        {-8.339229268457138e-05, -0.00051819820088917887, 0.00078674689472449204, 0.0083851476364280898, -0.024383764730831342, 0.020755550015489538, 0.0016004048693735405, -0.010284094700523544, 0.0037416005089124732},
        {-0.0019714223018471953, 0.0031807623995708653, 0.0036922394864867133, -0.0031087634707741077, -0.011321148753458245, 0.0016004048693735405, 0.027233534350121102, -0.027087266263278321, 0.0077816596838052214},
        {0.003826787781539334, -0.008364144280377973, -0.00047442783423859067, 0.0027546876663250477, 0.017667677219191935, -0.010284094700523544, -0.027087266263278321, 0.031363944175842214, -0.0094031637644803392},
        {-0.0012501461118103188, 0.0028210420151058759, -0.00012177433104526507, -0.00072679316476061335, -0.0056916176360769042, 0.0037416005089124732, 0.0077816596838052214, -0.0094031637644803392, 0.0028491928003499317},
    },
    {  // node 6
        {0.0050397174263206931, -0.014862995639595153, 0.0098890759892647489, 0.0071055072346077374, -0.0076931320860874515, -8.3392290642466221e-05, -0.0019714223027339807, 0.0038267877805469182, -0.0012501461116810166},
        {-0.014862995639595153, 0.044436231501553042, -0.031180364147345364, -0.019460921829489396, 0.02394858817927082, -0.00051819820201502297, 0.0031807624004030828, -0.0083641442794364987, 0.0028210420166547455},
        {0.0098890759892647489, -0.031180364147345364, 0.026407481519705563, 0.0074306704761641059, -0.016429648050792053, 0.00078674689918048545, 0.003692239488134884, -0.00047442784224712141, -0.0001217743320649785},
        {0.0071055072346077374, -0.019460921829489396, 0.0074306704761641059, 0.02262390663746679, -0.025003441192332627, 0.0083851476412964924, -0.0031087634697563303, 0.002754687665750012, -0.0007267931637064259},
        {-0.0076931320860874515, 0.02394858817927082, -0.016429648050792053, -0.025003441192332627, 0.048906487032438779, -0.024383764717272317, -0.011321148754245879, 0.017667677221238843, -0.0056916176322178097},
        {-8.3392290642466221e-05, -0.00051819820201502297, 0.00078674689918048545, 0.0083851476412964924, -0.024383764717272317, 0.020755549990370908, 0.0016004048722726863, -0.010284094700569891, 0.003741600507379587},
        {-0.0019714223027339807, 0.0031807624004030828, 0.003692239488134884, -0.0031087634697563303, -0.011321148754245879, 0.0016004048722726863, 0.027233534359038202, -0.02708726627253271, 0.0077816596794204581},
        {0.0038267877805469182, -0.0083641442794364987, -0.00047442784224712141, 0.002754687665750012, 0.017667677221238843, -0.010284094700569891, -0.02708726627253271, 0.031363944188449865, -0.0094031637611990578},
        {-0.0012501461116810166, 0.0028210420166547455, -0.0001217743320649785, -0.0007267931637064259, -0.0056916176322178097, 0.003741600507379587, 0.0077816596794204581, -0.0094031637611990578, 0.0028491927974148763},
    },
    {  // node 7
        {0.0050397174249755131, -0.014862995638375462, 0.0098890759881373295, 0.0071055072326812237, -0.0076931320818642698, -8.3392292393508498e-05, -0.0019714223016367529, 0.0038267877809881291, -0.0012501461125121493},
        {-0.014862995638375462, 0.044436231505311473, -0.031180364148760537, -0.019460921832051493, 0.02394858817775283, -0.00051819820231683168, 0.0031807623994351327, -0.0083641442806092932, 0.0028210420196146508},
        {0.0098890759881373295, -0.031180364148760537, 0.026407481528204289, 0.0074306704714636167, -0.016429648051446911, 0.00078674690516463916, 0.0036922394881635299, -0.00047442784734222517, -0.00012177433358314684},
        {0.0071055072326812237, -0.019460921832051493, 0.0074306704714636167, 0.022623906644410666, -0.025003441194667061, 0.0083851476432264122, -0.0031087634686928207, 0.0027546876688153972, -0.00072679316518512707},
        {-0.0076931320818642698, 0.02394858817775283, -0.016429648051446911, -0.025003441194667061, 0.048906487017309819, -0.024383764704795915, -0.011321148754691106, 0.017667677219123882, -0.0056916176267204736},
        {-8.3392292393508498e-05, -0.00051819820231683168, 0.00078674690516463916, 0.0083851476432264122, -0.024383764704795915, 0.020755549974021584, 0.0016004048709338124, -0.01028409469970922, 0.0037416005058700259},
        {-0.0019714223016367529, 0.0031807623994351327, 0.0036922394881635299, -0.0031087634686928207, -0.011321148754691106, 0.0016004048709338124, 0.027233534371519694, -0.027087266280951792, 0.0077816596759211721},
        {0.0038267877809881291, -0.0083641442806092932, -0.00047442784734222517, 0.0027546876688153972, 0.017667677219123882, -0.01028409469970922, -0.027087266280951792, 0.031363944198151084, -0.0094031637584653192},
        {-0.0012501461125121493, 0.0028210420196146508, -0.00012177433358314684, -0.00072679316518512707, -0.0056916176267204736, 0.0037416005058700259, 0.0077816596759211721, -0.0094031637584653192, 0.0028491927950607455},
    },
    {  // node 8
        {0.0050397174327241967, -0.014862995648495183, 0.0098890759879307674, 0.0071055072403737422, -0.0076931320848587226, -8.3392300752418104e-05, -0.0019714222977051587, 0.0038267877858290692, -0.001250146115046329},
        {-0.014862995648495183, 0.044436231507144985, -0.031180364141806968, -0.019460921824752172, 0.023948588181912582, -0.00051819820532247884, 0.0031807623944734298, -0.0083641442845494279, 0.0028210420213949385},
        {0.0098890759879307674, -0.031180364141806968, 0.026407481508980771, 0.0074306704722205061, -0.016429648050598364, 0.00078674690775155552, 0.0036922394882149051, -0.00047442783891522269, -0.00012177433377829534},
        {0.0071055072403737422, -0.019460921824752172, 0.0074306704722205061, 0.022623906624538545, -0.025003441186849589, 0.0083851476423875033, -0.0031087634719175702, 0.0027546876704694842, -0.00072679316647091951},
        {-0.0076931320848587226, 0.023948588181912582, -0.016429648050598364, -0.025003441186849589, 0.048906487011446051, -0.024383764695668199, -0.011321148755599189, 0.01766767721077803, -0.0056916176305630327},
        {-8.3392300752418104e-05, -0.00051819820532247884, 0.00078674690775155552, 0.0083851476423875033, -0.024383764695668199, 0.020755549969850181, 0.0016004048672143289, -0.010284094693280827, 0.0037416005078197661},
        {-0.0019714222977051587, 0.0031807623944734298, 0.0036922394882149051, -0.0031087634719175702, -0.011321148755599189, 0.0016004048672143289, 0.027233534365146042, -0.027087266270940276, 0.007781659681112967},
        {0.0038267877858290692, -0.0083641442845494279, -0.00047442783891522269, 0.0027546876704694842, 0.01766767721077803, -0.010284094693280827, -0.027087266270940276, 0.031363944184813648, -0.0094031637642048877},
        {-0.001250146115046329, 0.0028210420213949385, -0.00012177433377829534, -0.00072679316647091951, -0.0056916176305630327, 0.0037416005078197661, 0.007781659681112967, -0.0094031637642048877, 0.0028491927997354709},
    },
};

}  // namespace hsbp::closure6

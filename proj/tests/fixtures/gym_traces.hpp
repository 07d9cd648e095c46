// Generated by generate_gym_traces.py from gymnasium 1.4.0. Do not edit.
#pragma once

#include <vector>

namespace fixtures {

struct Trace {
    std::vector<double> initial;
    std::vector<int> actions;
    std::vector<std::vector<double>> states; // state after each step
};

inline const Trace kCartPole0{
    {-0.02525739365474007, -0.04070099383245136, 0.011176337306119347, -0.0439337926465908},
    {0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0},
    {
        {-0.026071413531389098, -0.23598141094319175, 0.01029766145318753, 0.2522543135391272},
        {-0.030791041750252934, -0.041008006324599444, 0.015342747723970075, -0.03716282806275362},
        {-0.031611201876744925, -0.23634657547540716, 0.014599491162715002, 0.2603211301896498},
        {-0.036338133386253066, -0.04143604697960851, 0.019805913766507997, -0.02772140700850001},
        {-0.03716685432584524, 0.15339635603548482, 0.019251485626337998, -0.314090134651493},
        {-0.03409892720513554, -0.041994470621372654, 0.012969682933308139, -0.015398617589194363},
        {-0.03493881661756299, 0.15293910106770006, 0.012661710581524252, -0.303961402862619},
        {-0.031880034596208986, -0.042360986044411214, 0.006582482524271871, -0.007312311158161611},
        {-0.032727254317097214, 0.15266594750466816, 0.0064362363011086395, -0.29791113786528395},
        {-0.02967393536700385, -0.04254715722278121, 0.00047801354380296035, -0.0032053053924082087},
        {-0.030524878511459474, -0.23767596058779336, 0.00041390743595479617, 0.2896284021918846},
        {-0.03527839772321534, -0.042559913978219566, 0.006206475479792489, -0.0029239538694123546},
        {-0.03612959600277973, 0.15247247993410978, 0.006147996402404242, -0.2936422181443294},
        {-0.03308014640409753, -0.04273658326407076, 0.00027515203951765377, 0.0009733423624296855},
        {-0.03393487806937895, 0.1523814207920999, 0.00029461888676624747, -0.2916227579441392},
        {-0.030887249653536952, -0.0427447300094517, -0.005537836272116538, 0.0011530735068898679},
        {-0.031742144253725985, -0.2377868245188933, -0.00551477480197874, 0.29208361363110963},
        {-0.03649788074410385, -0.04258667834435853, 0.00032689747064345263, -0.002333488786885829},
        {-0.03734961431099102, -0.23771331622418787, 0.00028022769490573606, 0.29045256024880517},
        {-0.04210388063547478, -0.04259536193667371, 0.00608927889988184, -0.002141972749639398},
        {-0.04295578787420826, 0.15243873315373316, 0.0060464394448890525, -0.2928974546705977},
        {-0.039907013211133595, -0.04276890248988782, 0.00018849035147709865, 0.0016862886663810972},
        {-0.04076239126093135, 0.152350344995489, 0.0002222161248047206, -0.29093716119944085},
        {-0.037715384361021564, -0.04277477407272923, -0.005596527099184097, 0.0018158417165817786},
        {-0.03857087984247615, -0.23781601760883161, -0.0055602102648524615, 0.292727754972707},
        {-0.043327200194652776, -0.04261523287672889, 0.0002943448346016779, -0.0017035894203842883},
        {-0.04417950485218736, -0.2377414041938518, 0.00026027304619399215, 0.2910721922562886},
        {-0.04893433293606439, -0.04262316512440409, 0.0060817168913197646, -0.0015286361598826348},
        {-0.04978679623855247, 0.1524110397079613, 0.006051144168122112, -0.29228651934279226},
        {-0.04673857544439324, -0.04279666430702231, 0.00020541378126626673, 0.0022987013799337652},
        {-0.04759450873053369, 0.15232234037698733, 0.00025138780886494204, -0.29031940782005444},
        {-0.044548061922993945, -0.04280319453763631, -0.0055550003475361475, 0.002442793318568781},
        {-0.04540412581374667, -0.23784504021279176, -0.005506144481164772, 0.29336788618494547},
        {-0.05016102661800251, -0.04264501976406371, 0.0003612132425341377, -0.0010465042960419169},
        {-0.051013927013283784, -0.23777214944637282, 0.0003402831566132994, 0.2917503678240075},
        {-0.055769370002211244, -0.04265505178021148, 0.00617529051309345, -0.000825218484280188},
        {-0.056622471037815474, 0.15237779479708483, 0.006158786143407846, -0.29155338642800827},
        {-0.05357491514187378, -0.042831427670021904, 0.0003277184148476808, 0.0030655656606121684},
        {-0.05443154369527421, 0.1522858220578478, 0.00038902972805992414, -0.28951394400235125},
        {-0.05138582725411726, -0.04284167444337328, -0.005401249151987101, 0.003291653338094447},
        {-0.052242660742984726, -0.2378857490634563, -0.005335416085225212, 0.29426553816136863},
        {-0.05700037572425385, -0.04268813893482723, 0.0005498946780021609, -9.531445963106844e-05},
        {-0.057854138502950396, 0.15242592167484428, 0.0005479883888095396, -0.292604692097404},
        {-0.05480562006945351, -0.04270383843795986, -0.0053041054531385405, 0.000251012703226805},
        {-0.05565969683821271, -0.23774932094283674, -0.005299085199074004, 0.2912557212897648},
        {-0.060414683257069446, -0.04255221412357016, 0.0005260292267212918, -0.003093751810529677},
        {-0.06126572753954085, -0.23768170541493444, 0.0004641541905106983, 0.28975509721680637},
        {-0.06601936164783953, -0.042566375901585296, 0.006259256134846825, -0.0027814041995025685},
        {-0.06687068916587123, 0.1524652517262616, 0.006203628050856774, -0.2934829056185705},
        {-0.063821384131346, -0.04274459531982289, 0.000333969938485364, 0.0011500854286478068},
    },
};

inline const Trace kCartPole1{
    {0.016103342805648707, 0.025515777777629742, -0.03891310990273611, -0.045694415560747895},
    {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0},
    {
        {0.0166136583612013, -0.16902720097819435, -0.03982699821395107, 0.23446157603859408},
        {0.013233114341637413, 0.026640490749231444, -0.03513776669317919, -0.07051325998366081},
        {0.013765924156622042, -0.16796054532081117, -0.036548031892852405, 0.21087973493034834},
        {0.01040671325020582, 0.02766439465486495, -0.032330437194245436, -0.0931044454584643},
        {0.010960001143303118, -0.16697960556474165, -0.03419252610341472, 0.18920548565007417},
        {0.007620409032008285, 0.028614414671978033, -0.030408416390413237, -0.11406469944699837},
        {0.008192697325447845, -0.16605892274080325, -0.032689710379353205, 0.16887161365773545},
        {0.004871518870631779, 0.02951531671386498, -0.029312278106198495, -0.1339420772267313},
        {0.005461825204909079, -0.16517477080807613, -0.03199111965073312, 0.1493510276057719},
        {0.0021583297887475565, 0.03039033090628654, -0.029004099098617682, -0.15325031208271123},
        {0.0027661364068732874, -0.16430457591565634, -0.03206910534027191, 0.13014320861274564},
        {-0.0005199551114398395, 0.03126173664159884, -0.029466241168016997, -0.17248212981379613},
        {0.0001052796213921374, -0.163426360061522, -0.03291588376429292, 0.11076142326567101},
        {-0.0031632475798383025, 0.032151419043022655, -0.0307006552989795, -0.192121857328025},
        {-0.0025202191989778496, -0.1625182005375175, -0.03454309244554, 0.09072039650297609},
        {-0.005770583209728199, 0.033081407037498345, -0.03272868451548048, -0.2126576361064108},
        {-0.005108955068978232, -0.16155769581797239, -0.03698183723760869, 0.06952414842361909},
        {-0.00834010898533768, -0.35613046868333403, -0.03559135426913631, 0.35031356698669464},
        {-0.015462718359004361, -0.1605208997608589, -0.028585082929402417, 0.0466233853725167},
        {-0.01867313635422154, -0.3552215452987899, -0.027652615221952084, 0.33015217343197234},
        {-0.025777567260197337, -0.15971709343450258, -0.021049571753312638, 0.028878777554324053},
        {-0.028971909128887387, -0.3545309541898628, -0.020471996202226155, 0.3148467147349965},
        {-0.036062528212684644, -0.15912345787151239, -0.014175061907526225, 0.01577854348007096},
        {-0.039244997370114894, -0.35403928310039245, -0.013859491037924805, 0.30395557950072477},
        {-0.046325783032122744, -0.15872258615057916, -0.00778037944791031, 0.006934111835192103},
        {-0.04950023475513433, -0.3537320964649598, -0.007641697211206468, 0.29715211529789576},
        {-0.05657487668443352, -0.15850204885546518, -0.0016986549052485532, 0.0020689571501901205},
        {-0.05974491766154282, -0.3535995977410612, -0.0016572757622447508, 0.2942154539716896},
        {-0.06681690961636405, -0.158454057982606, 0.004227033317189041, 0.0010103074674858714},
        {-0.06998599077601617, 0.036607017098078926, 0.004247239466538759, -0.2903359470772724},
        {-0.06925385043405459, -0.15857523810534882, -0.0015594794750066893, 0.0036834797049804524},
        {-0.07242535519616157, -0.35367478944609276, -0.0014858098809070802, 0.29587396407825073},
        {-0.07949885098508343, -0.1585316879895096, 0.004431669400657935, 0.0027228070520262104},
        {-0.08266948474487362, 0.03652642716305571, 0.004486125541698459, -0.2885585859812982},
        {-0.08193895620161251, -0.158659208943168, -0.001285046177927505, 0.005535838537903404},
        {-0.08511214038047588, -0.3537627072042949, -0.0011743294071694368, 0.29781304082010046},
        {-0.09218739452456177, -0.158624035702667, 0.004781931409232572, 0.004759982630704818},
        {-0.09535987523861511, 0.03642901041622473, 0.004877131061846668, -0.2864103588885344},
        {-0.09463129503029062, -0.15876215485343995, -0.0008510761159240196, 0.007806777698160128},
        {-0.09780653812735943, 0.0363719916444859, -0.0006949405619608171, -0.2851445523903917},
        {-0.09707909829446972, -0.15874004134454406, -0.006397831609768652, 0.0073191139134818894},
        {-0.1002538991213606, -0.3537696570201999, -0.006251449331499014, 0.29797660053545605},
        {-0.10732929226176459, -0.15855915293781486, -0.00029191732078989296, 0.0033286519714388896},
        {-0.11050047532052089, -0.3536769164225271, -0.00022534428136111517, 0.2959194610370882},
        {-0.11757401364897144, -0.15855175341309552, 0.005693044939380649, 0.0031654727361297708},
        {-0.12074504871723335, 0.03648809049478233, 0.005756354394103245, -0.2877158059253012},
        {-0.1200152869073377, -0.15871547528163596, 2.0382755972206054e-06, 0.006777050455541445},
        {-0.12318959641297042, 0.036406446706053336, 0.0001375792847080495, -0.28590523327235895},
        {-0.12246146747884935, -0.158717466359783, -0.00558052538073913, 0.006821081865984346},
        {-0.12563581680604502, -0.35375894215679005, -0.005444103743419443, 0.29773807410230796},
    },
};

inline const Trace kCartPole2{
    {-0.008558252614471074, 0.048862925564678014, 0.04691986896521037, -0.024302846845166773},
    {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0},
    {
        {-0.007580994103177513, 0.24328169669676114, 0.046433812028307035, -0.30182067583012884},
        {-0.0027153601692422903, 0.04752975901320414, 0.04039739851170446, 0.005137377749819427},
        {-0.0017647649889782075, 0.24204976838749198, 0.04050014606670085, -0.2745309784934763},
        {0.0030762303787716322, 0.04637406985778281, 0.03500952649683132, 0.03064567076736774},
        {0.004003711775927289, 0.24097693003706044, 0.03562243991217867, -0.2507890507244131},
        {0.008823250376668498, 0.0453648733640995, 0.03060665889769041, 0.052913668833257155},
        {0.009730547843950488, 0.2400348986803456, 0.03166493227435555, -0.22995765650608269},
        {0.014531245817557402, 0.04447510546709904, 0.027065779144233897, 0.0725429188959581},
        {0.015420747926899382, 0.23919878731739916, 0.028516637522153058, -0.21147925828001157},
        {0.020204723673247365, 0.043680962166766785, 0.024287052356552825, 0.09006099659096362},
        {0.021078342916582702, 0.2384465260989225, 0.026088272288372096, -0.19486149865728758},
        {0.025847273438561153, 0.042961299868747194, 0.022191042315226346, 0.10593564327077315},
        {0.026706499435936098, 0.23775832863278284, 0.02430975518064181, -0.1796643271051262},
        {0.03146166600859175, 0.04229709310377486, 0.020716468638539286, 0.12058726161100608},
        {0.03230760787066725, 0.23711620172349604, 0.023128213870759407, -0.16548848923723314},
        {0.03704993190513717, 0.041670942615567974, 0.019818444086014745, 0.13440008176046736},
        {0.03788335075744853, 0.23650349337367102, 0.02250644572122409, -0.15196511171574384},
        {0.042613420624921954, 0.04106662523637064, 0.019467143486909214, 0.1477322826021052},
        {0.04343475312964937, 0.23590447206700746, 0.022421789138951317, -0.13874613246941425},
        {0.048152842570989514, 0.040468676429020856, 0.01964686648956303, 0.1609253282052785},
        {0.04896221609956993, 0.23530392949512305, 0.022865373053668602, -0.1254953413406567},
        {0.053668294689472394, 0.03986199637264362, 0.020355466226855468, 0.1743127591116173},
        {0.054465534616925264, 0.23468679855447555, 0.023841721409087815, -0.11187980893466726},
        {0.059159270588014776, 0.03923147073113939, 0.02160412523039447, 0.1882286621342143},
        {0.059943900002637565, 0.23403777837770248, 0.025368698473078755, -0.09756149058577518},
        {0.06462465557019162, 0.03856159763217071, 0.023417468661363253, 0.20301603088758768},
        {0.06539588752283504, 0.23334095824906323, 0.027477789279115004, -0.08218879762069853},
        {0.0700627066878163, 0.037836112855495624, 0.025834013326701034, 0.21903522208507298},
        {0.07081942894492622, 0.2325794324463817, 0.030214717768402493, -0.06538792939081578},
        {0.07547101759385386, 0.0370376058136683, 0.028906959180586177, 0.23667270934026585},
        {0.07621176971012722, 0.23173489838654626, 0.03364041336739149, -0.04675375697472228},
        {0.08084646767785815, 0.4263587226047483, 0.03270533822789705, -0.32863590413970917},
        {0.08937364212995312, 0.23078681006318888, 0.026132620145102866, -0.02582125950534997},
        {0.0939893783312169, 0.42552444017953717, 0.025616194954995865, -0.31014585270709605},
        {0.10249986713480765, 0.23004706317040552, 0.019413277900853943, -0.009495646877381358},
        {0.10710080839821576, 0.42488529899716454, 0.019223364963306316, -0.2959907848428908},
        {0.11559851437815905, 0.22949465008221348, 0.0133035492664485, 0.0026923582514739586},
        {0.12018840737980331, 0.42442330734870165, 0.013357396431477979, -0.2857636254140814},
        {0.12867687352677734, 0.22911342808572652, 0.007642123923196351, 0.01110201624546353},
        {0.13325914208849188, 0.424124951920014, 0.007864164248105621, -0.27915996517777547},
        {0.14174164112689216, 0.2288917030903434, 0.0022809649445501116, 0.015992892908964496},
        {0.14631947518869903, 0.4239808683482912, 0.0026008228027294016, -0.2759694906085029},
        {0.15479909255566485, 0.22882190753021212, -0.0029185670094406565, 0.01753260157885267},
        {0.1593755307062691, 0.42398559251929374, -0.002567914977863603, -0.27606973658018},
        {0.16785524255665496, 0.22890037198662397, -0.008089309709467203, 0.015802163224227284},
        {0.17243324999638743, 0.424137393925989, -0.0077732664449826575, -0.27942201907036357},
        {0.1809159978749072, 0.22912718830050344, -0.01336170682638993, 0.010799134667832222},
        {0.18549854164091725, 0.03419938548109111, -0.013145724133033285, 0.2992365132614398},
        {0.18618252935053908, 0.22950622610304705, -0.007160993867804489, 0.0024368336224313003},
        {0.19077265387260003, 0.034487702195388964, -0.007112257195355863, 0.2928518049242743},
    },
};

inline const Trace kMountainCarPump{
    {-0.4882475782362535, 0.0},
    {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {
        {-0.4875122154861483, 0.0007353627501051454},
        {-0.48604697357135557, 0.0014652419147927467},
        {-0.483862774825985, 0.0021841987453705674},
        {-0.48097589074983055, 0.0028868840761544475},
        {-0.4774078078957874, 0.0035680828540431263},
        {-0.4731850496388836, 0.004222758256903822},
        {-0.4683389545265815, 0.004846095112302086},
        {-0.4629054123088758, 0.00543354221770569},
        {-0.4569245592610133, 0.0059808530478625},
        {-0.4504404350338599, 0.006484124227153387},
        {-0.4435006039768107, 0.006939831057049205},
        {-0.4361557446437264, 0.007344859333084287},
        {-0.4284592119720674, 0.007696532671659067},
        {-0.4204665773709593, 0.007992634601108026},
        {-0.41223515261435667, 0.00823142475660268},
        {-0.4038235039612301, 0.008411648653126533},
        {-0.3952909632720558, 0.008532540689174278},
        {-0.38669714302577834, 0.008593820246277499},
        {-0.37810146204268824, 0.008595680983090093},
        {-0.36956268837998435, 0.008538773662703895},
        {-0.36113850529744246, 0.008424183082541902},
        {-0.3528851054147214, 0.008253399882721031},
        {-0.34485681723642664, 0.008028288178294745},
        {-0.33710576715302526, 0.007751050083401401},
        {-0.32968157888814403, 0.0074241882648812185},
        {-0.32263111121095694, 0.0070504676771871114},
        {-0.3159982336199013, 0.006632877591055627},
        {-0.30982363867945656, 0.0061745949404447545},
        {-0.3041446887961262, 0.005678949883330324},
        {-0.2989952944846651, 0.005149394311461129},
        {-0.2944058206223673, 0.004589473862297814},
        {-0.29040301682910424, 0.004002803793263048},
        {-0.28700996794555794, 0.0033930488835462753},
        {-0.28424606060530694, 0.0027639073402510074},
        {-0.282126962094944, 0.002119098510362934},
        {-0.2806646080519511, 0.0014623540429929056},
        {-0.27986719604068633, 0.0007974120112647554},
        {-0.2797391826482301, 0.00012801339245620312},
        {-0.2802812824282758, -0.000542099780045721},
        {-0.2834904677663167, -0.003209185338040887},
        {-0.28934872539562156, -0.005858257629304888},
        {-0.29782277972387444, -0.008474054328252868},
        {-0.3088636167968341, -0.01104083707295966},
        {-0.3224058622327992, -0.013542245435965109},
        {-0.3383670889511561, -0.015961226718356893},
        {-0.35664715043106454, -0.018280061479908467},
        {-0.3771276508788748, -0.020480500447810263},
        {-0.39967167292943806, -0.022544022050563273},
        {-0.4241238840288486, -0.02445221109941054},
        {-0.45031113231541336, -0.02618724828656479},
    },
};

inline const Trace kMountainCarWall{
    {-1.1, -0.02},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1},
    {
        {-1.118531300575228, -0.018531300575227838},
        {-1.1356196286803468, -0.017088328105118743},
        {-1.1512953999406332, -0.015675771260286374},
        {-1.1655920927018995, -0.014296692761266282},
        {-1.1785448288459173, -0.012952736144017799},
        {-1.190189152862084, -0.011644324016166878},
        {-1.2, 0.0},
        {-1.1987581039591646, 0.0012418960408353682},
        {-1.196270205713714, 0.002487898245450696},
        {-1.192528173202872, 0.0037420325108419024},
        {-1.1875200116579745, 0.005008161544897544},
        {-1.1812301149799374, 0.006289896678037213},
        {-1.173639613080305, 0.007590501899632274},
        {-1.1647268252899894, 0.008912787790315643},
        {-1.1544678319750572, 0.010258993314932281},
        {-1.1428371780811093, 0.011630653893947986},
        {-1.1298087232406397, 0.013028454840469574},
        {-1.1153566530398957, 0.01445207020074402},
        {-1.099456664703654, 0.015899988336241656},
        {-1.0820873374064657, 0.017369327297188503},
        {-1.0632316922043448, 0.018855645202120963},
        {-1.0428789387484478, 0.02035275345589685},
        {-1.0210263951067677, 0.021852543641680097},
        {-0.9976815529635055, 0.02334484214326223},
        {-0.9728642432689987, 0.024817309694506837},
        {-0.9466088376075816, 0.02625540566141704},
        {-0.9189663992733029, 0.027642438334278683},
        {-0.890006677152493, 0.028959722120809904},
        {-0.8598198176141667, 0.03018685953832629},
        {-0.8285176579324836, 0.03130215968168315},
        {-0.7962344628281905, 0.032283195104292964},
        {-0.7621269767676055, 0.03410748606058504},
        {-0.7253793438700272, 0.03674763289757829},
        {-0.6882091032325096, 0.03717024063751764},
        {-0.6498538560238695, 0.03835524720864011},
        {-0.609574175039763, 0.04027968098410645},
        {-0.5696568043072422, 0.03991737073252076},
        {-0.5293950964899505, 0.04026170781729166},
        {-0.48808991845677396, 0.0413051780331766},
        {-0.44805055344871014, 0.040039365008063814},
        {-0.4085729616177166, 0.03947759183099354},
        {-0.368941043674083, 0.039631917943633604},
        {-0.33142788769408127, 0.03751315598000173},
        {-0.2952774906734677, 0.03615039702061356},
        {-0.2597087062017342, 0.035568784471733526},
        {-0.22691874135320728, 0.032789964848526906},
        {-0.19607151897479497, 0.0308472223784123},
        {-0.16630412835905617, 0.029767390615738794},
        {-0.13973199642608952, 0.026572131932966644},
        {-0.11544340571544198, 0.024288590710647547},
    },
};

inline const Trace kMountainCarMixed{
    {-0.5515304047442062, 0.0},
    {0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1},
    {
        {-0.5523211625948785, -0.0007907578506722361},
        {-0.5528967690158746, -0.0005756064209960397},
        {-0.5522529232986069, 0.0006438457172676982},
        {-0.5523944360520836, -0.00014151275347678975},
        {-0.552320249869043, 7.418618304058856e-05},
        {-0.5510309190763736, 0.001289330792669448},
        {-0.5505360793661697, 0.0004948397102038974},
        {-0.5498394297006828, 0.0006966496654868543},
        {-0.5479461783379522, 0.0018932513627305885},
        {-0.5468704837831045, 0.0010756945548477197},
        {-0.5456203931696127, 0.0012500906134918048},
        {-0.5432052605415902, 0.0024151326280225064},
        {-0.5416431640532142, 0.0015620964883760356},
        {-0.5399458007383282, 0.0016973633148859785},
        {-0.5371258838727804, 0.002819916865547828},
        {-0.5352045415391762, 0.001921342333604178},
        {-0.533196173546228, 0.0020083679929482085},
        {-0.5301158350134468, 0.0030803385327811215},
        {-0.5279866216489134, 0.0021292133645334364},
        {-0.5258245003893927, 0.0021621212595207538},
        {-0.5226456863179799, 0.0031788140714127614},
        {-0.5204740204064296, 0.0021716659115502378},
        {-0.5183257898155779, 0.0021482305908517847},
        {-0.5152171049687311, 0.003108684846846815},
        {-0.5131712760274498, 0.002045828941281254},
        {-0.5112036405782039, 0.0019676354492458867},
        {-0.5083289472188063, 0.002874693359397574},
        {-0.5065687375216185, 0.0017602096971878096},
        {-0.5049361975525052, 0.0016325399691132837},
        {-0.5024435538049339, 0.00249264374757135},
        {-0.5011094677286111, 0.0013340860763228276},
        {-0.4999439235284984, 0.001165544200112676},
        {-0.49795564185004454, 0.001988281678453907},
        {-0.49715949403149, 0.0007961478185545044},
        {-0.49656143296758987, 0.0005980610639001415},
        {-0.49516592969276363, 0.0013955032748262598},
        {-0.49498341426521997, 0.00018251542754368498},
        {-0.495015250541864, -3.1836276644037144e-05},
        {-0.49426120062892487, 0.000754049912939163},
        {-0.4947268985683978, -0.00046569793947292496},
        {-0.49540886493145825, -0.0006819663630604693},
        {-0.49530200369543154, 0.00010686123602673557},
        {-0.49640711344439614, -0.001105109748964625},
        {-0.4977159345518484, -0.0013088211074523074},
        {-0.49821868195690194, -0.000502747405053526},
        {-0.4999115961962058, -0.0016929142393038313},
        {-0.501782014801085, -0.0018704186048791348},
        {-0.5028159423153133, -0.0010339275142283266},
        {-0.5050056401114855, -0.0021896977961721933},
        {-0.5073347141230489, -0.002329074011563339},
    },
};

} // namespace fixtures

// Reference phase shifts evaluated in 50-digit arithmetic at the exact f64 inputs listed.

pub const PHASE_VALUES: &[(&str, f64, f64, f64, f64, f64, f64, usize, f64)] = &[
    ("Shell3D", -1.0, 1.0, 0.0, 0.001, 1.0, 1.0, 0, 1499.999799999998064),
    ("Shell3D", -1.0, 1.0, 0.0, 0.001, 1.0, 1.0, 1, 1.666666666666552485e-10),
    ("Shell3D", -1.0, 1.0, 0.0, 0.001, 1.0, 1.0, 2, 5.5555548941799734933e-18),
    ("Shell3D", -1.0, 1.0, 0.0, 0.02, 1.0, 1.0, 0, 74.995999984762715937),
    ("Shell3D", -1.0, 1.0, 0.0, 0.02, 1.0, 1.0, 1, 1.3333333187044226121e-6),
    ("Shell3D", -1.0, 1.0, 0.0, 0.02, 1.0, 1.0, 2, 1.7776931257239821957e-11),
    ("Shell3D", -1.0, 1.0, 0.0, 0.3, 1.0, 2.0, 0, 2.3796091598841835934),
    ("Shell3D", -1.0, 1.0, 0.0, 0.3, 1.0, 2.0, 1, 0.035676164956039261571),
    ("Shell3D", -1.0, 1.0, 0.0, 0.3, 1.0, 2.0, 2, 0.00041421528067439455452),
    ("Shell3D", 2.5, 0.5, 0.0, 0.2, 1.0, 1.5, 0, -0.15859854473127514682),
    ("Shell3D", 2.5, 0.5, 0.0, 0.2, 1.0, 1.5, 1, -0.0023774777005989292828),
    ("Shell3D", 2.5, 0.5, 0.0, 0.2, 1.0, 1.5, 2, -9.7263420596626862458e-6),
    ("Shell3D", -3.0, 1.5, 0.0, 0.05, 1.0, 0.7, 0, -0.03783679103749710774),
    ("Shell3D", -3.0, 1.5, 0.0, 0.05, 1.0, 0.7, 1, -0.000018391658186354390977),
    ("Shell3D", -3.0, 1.5, 0.0, 0.05, 1.0, 0.7, 2, -1.8598605861882296016e-9),
    ("Well3D", -0.8224670334241132, 1.0, 0.0, 0.001, 1.0, 1.0, 0, 1999.9998692178154229),
    ("Well3D", -0.8224670334241132, 1.0, 0.0, 0.001, 1.0, 1.0, 1, 7.195139859364865984e-11),
    ("Well3D", -0.8224670334241132, 1.0, 0.0, 0.001, 1.0, 1.0, 2, 1.7615780155071061397e-18),
    ("Well3D", -0.8224670334241132, 1.0, 0.0, 0.1, 1.0, 2.0, 0, 9.9738753923540557434),
    ("Well3D", -0.8224670334241132, 1.0, 0.0, 0.1, 1.0, 2.0, 1, 0.0005747425111597223581),
    ("Well3D", -0.8224670334241132, 1.0, 0.0, 0.1, 1.0, 2.0, 2, 5.6148100941287671696e-7),
    ("Well3D", -2.0, 0.5, 0.0, 0.4, 1.0, 1.0, 0, -1.0833005554778767878),
    ("Well3D", -2.0, 0.5, 0.0, 0.4, 1.0, 1.0, 1, 0.0086148370520239297221),
    ("Well3D", -2.0, 0.5, 0.0, 0.4, 1.0, 1.0, 2, 0.000029338819293704707571),
    ("Well3D", -7.402203300817019, 1.0, 0.0, 0.01, 1.0, 1.0, 0, 199.9968918493300948),
    ("Well3D", -7.402203300817019, 1.0, 0.0, 0.01, 1.0, 1.0, 1, -2.8828394895175544614e-7),
    ("Well3D", -7.402203300817019, 1.0, 0.0, 0.01, 1.0, 1.0, 2, -1.1831079745004101096e-11),
    ("Well3D", -0.7, 1.8, 0.0, 0.3, 1.0, 1.3, 0, -0.60732864720918910564),
    ("Well3D", -0.7, 1.8, 0.0, 0.3, 1.0, 1.3, 1, 0.016369335184894616297),
    ("Well3D", -0.7, 1.8, 0.0, 0.3, 1.0, 1.3, 2, 0.000041526811392861387017),
    ("Ring2D", -1.0, 1.0, 1.0, 0.001, 1.0, 1.0, 0, -13.549779838685550661),
    ("Ring2D", -1.0, 1.0, 1.0, 0.001, 1.0, 1.0, 1, 6.1284970768770406001e-8),
    ("Ring2D", -1.0, 1.0, 1.0, 0.001, 1.0, 1.0, 2, 3.6864810496476022801e-15),
    ("Ring2D", -1.0, 1.0, 1.0, 0.1, 1.0, 1.0, 0, -15.418313711908346763),
    ("Ring2D", -1.0, 1.0, 1.0, 0.1, 1.0, 1.0, 1, 0.0021811399181196413622),
    ("Ring2D", -1.0, 1.0, 1.0, 0.1, 1.0, 1.0, 2, 1.1939989679356472312e-6),
    ("Ring2D", 0.8, 1.5, 2.0, 0.1, 1.5, 1.0, 0, -0.29474240947321535033),
    ("Ring2D", 0.8, 1.5, 2.0, 0.1, 1.5, 1.0, 1, -0.001150256980241195328),
    ("Ring2D", 0.8, 1.5, 2.0, 0.1, 1.5, 1.0, 2, -7.780510148236952946e-7),
    ("Ring2D", -2.0, 0.5, 0.5, 0.3, 2.0, 2.0, 0, 1.6023212433903324602),
    ("Ring2D", -2.0, 0.5, 0.5, 0.3, 2.0, 2.0, 1, 0.18719550778834051954),
    ("Ring2D", -2.0, 0.5, 0.5, 0.3, 2.0, 2.0, 2, 0.0030241302798742806871),
    ("Well2D", -1.0, 1.0, 1.0, 0.001, 1.0, 1.0, 0, -4.2568862084115310867),
    ("Well2D", -1.0, 1.0, 1.0, 0.001, 1.0, 1.0, 1, 2.9867978893880655448e-8),
    ("Well2D", -1.0, 1.0, 1.0, 0.001, 1.0, 1.0, 2, 1.2062078801585259351e-15),
    ("Well2D", -1.0, 1.0, 1.0, 0.1, 2.0, 1.0, 0, 4.7792458722644332938),
    ("Well2D", -1.0, 1.0, 1.0, 0.1, 2.0, 1.0, 1, 0.00073759564535765673371),
    ("Well2D", -1.0, 1.0, 1.0, 0.1, 2.0, 1.0, 2, 2.8468635142734393256e-7),
    ("Well2D", -2.0, 0.5, 0.5, 0.3, 2.0, 2.0, 0, 3.0068441128496609394),
    ("Well2D", -2.0, 0.5, 0.5, 0.3, 2.0, 2.0, 1, 0.076060609387123913168),
    ("Well2D", -2.0, 0.5, 0.5, 0.3, 2.0, 2.0, 2, 0.00090210747892665186495),
    ("Well2D", -0.3, 1.5, 1.5, 0.05, 1.0, 1.2, 0, 2.297398652571790506),
    ("Well2D", -0.3, 1.5, 1.5, 0.05, 1.0, 1.2, 1, 0.00020018327279829441987),
    ("Well2D", -0.3, 1.5, 1.5, 0.05, 1.0, 1.2, 2, 2.8341893790970309128e-8),
    ("DoubleDelta1D", -1.0, 1.0, 0.0, 0.0001, 1.0, 1.0, 0, 4999.9999666666664493),
    ("DoubleDelta1D", -1.0, 1.0, 0.0, 0.0001, 1.0, 1.0, 1, 14999.999979999999279),
    ("DoubleDelta1D", 1.0, 0.0, 0.0, 1e-06, 1.0, 1.0, 0, -1.0000009999999999993),
    ("DoubleDelta1D", 1.0, 0.0, 0.0, 1e-06, 1.0, 1.0, 1, -9.9999900000066657616e-13),
    ("DoubleDelta1D", 2.0, 0.0, 0.0, 0.3, 1.0, 1.0, 0, -4.1927278233688468335),
    ("DoubleDelta1D", 2.0, 0.0, 0.0, 0.3, 1.0, 1.0, 1, -0.11163213837045253891),
    ("DoubleDelta1D", 1.0, 2.0, 0.0, 0.01, 1.0, 1.0, 0, 101.0068020055098998),
    ("DoubleDelta1D", 1.0, 2.0, 0.0, 0.01, 1.0, 1.0, 1, -0.0099013136093895179442),
    ("DoubleDelta1D", -1.0, -0.5, 0.0, 0.2, 1.0, 3.0, 0, 0.094948098503786645247),
    ("DoubleDelta1D", -1.0, -0.5, 0.0, 0.2, 1.0, 3.0, 1, 0.051075249122270183316),
    ("Well1D", -2.4674011002723395, 1.0, 0.0, 0.0001, 1.0, 1.0, 0, 9999.9999869309026233),
    ("Well1D", -2.4674011002723395, 1.0, 0.0, 0.0001, 1.0, 1.0, 1, 19999.999673666131683),
    ("Well1D", -9.869604401089358, 1.0, 0.0, 0.001, 1.0, 1.0, 0, -0.000500000070981454933),
    ("Well1D", -9.869604401089358, 1.0, 0.0, 0.001, 1.0, 1.0, 1, -0.0010000002826728280872),
    ("Well1D", -2.0, 1.0, 0.0, 0.05, 1.0, 1.0, 0, 17.98451485069396239),
    ("Well1D", -2.0, 1.0, 0.0, 0.05, 1.0, 1.0, 1, 0.17310456027001001872),
    ("Well1D", -1.3, 0.4, 0.0, 0.6, 1.0, 2.0, 0, 0.36872365573203222676),
    ("Well1D", -1.3, 0.4, 0.0, 0.6, 1.0, 2.0, 1, 0.35554679112447034409),
    ("Well1D", -2.4674011002723395, 2.0, 0.0, 0.1, 1.0, 1.0, 0, 10.524310089532521412),
    ("Well1D", -2.4674011002723395, 2.0, 0.0, 0.1, 1.0, 1.0, 1, -0.17863958100686131949),
];

"""Chebyshev tables for the Riemann-Siegel correction terms.

Generated by scripts/gen_rs_tables.py; do not edit by hand.
Each series represents C_k(p) on p in [0,1] (argument 2p-1).
"""

import numpy as np

RS_C0 = np.array([
    np.float64(0.642667286239766),
    np.float64(0.0),
    np.float64(0.27197299999785457),
    np.float64(0.0),
    np.float64(0.010738605819340188),
    np.float64(0.0),
    np.float64(-0.0013743815296332852),
    np.float64(0.0),
    np.float64(-0.00012468221880318784),
    np.float64(0.0),
    np.float64(-5.764599706134768e-07),
    np.float64(0.0),
    np.float64(2.7280674290744964e-07),
    np.float64(0.0),
    np.float64(8.077953461525852e-09),
    np.float64(0.0),
    np.float64(-2.0884605470244766e-10),
    np.float64(0.0),
    np.float64(-1.3114974088984109e-11),
    np.float64(0.0),
    np.float64(-1.4181849812078764e-14),
    np.float64(0.0),
    np.float64(1.0369976903549679e-14),
])

RS_C1 = np.array([
    np.float64(0.0),
    np.float64(0.010697913921073717),
    np.float64(0.0),
    np.float64(0.017170651243259494),
    np.float64(0.0),
    np.float64(0.0027932111497907313),
    np.float64(0.0),
    np.float64(-3.637565362488656e-05),
    np.float64(0.0),
    np.float64(-2.710895542401187e-05),
    np.float64(0.0),
    np.float64(-1.0483751704899773e-06),
    np.float64(0.0),
    np.float64(5.886470389888534e-08),
    np.float64(0.0),
    np.float64(4.323031933330151e-09),
    np.float64(0.0),
    np.float64(-1.1281648505448807e-11),
    np.float64(0.0),
    np.float64(-6.549451414089179e-12),
])

RS_C2 = np.array([
    np.float64(0.003146115846158226),
    np.float64(0.0),
    np.float64(-0.002308783851988065),
    np.float64(0.0),
    np.float64(5.769819846829822e-05),
    np.float64(0.0),
    np.float64(0.0003523885943789476),
    np.float64(0.0),
    np.float64(2.5246648165604893e-05),
    np.float64(0.0),
    np.float64(-3.442807606447597e-06),
    np.float64(0.0),
    np.float64(-3.534700916477862e-07),
    np.float64(0.0),
    np.float64(3.778575306955472e-09),
    np.float64(0.0),
    np.float64(1.2814712304748842e-09),
])

RS_C3 = np.array([
    np.float64(0.0),
    np.float64(7.123477037783629e-05),
    np.float64(0.0),
    np.float64(0.00023234198206717176),
    np.float64(0.0),
    np.float64(-0.00012929892049934376),
    np.float64(0.0),
    np.float64(1.8076067172126467e-05),
    np.float64(0.0),
    np.float64(6.5214174024645274e-06),
    np.float64(0.0),
    np.float64(-1.2148547174291774e-07),
    np.float64(0.0),
    np.float64(-7.257604547927049e-08),
])

RS_C4 = np.array([
    np.float64(0.0001675103115798573),
    np.float64(0.0),
    np.float64(-0.00022709321419455612),
    np.float64(0.0),
    np.float64(6.470984917124255e-05),
    np.float64(0.0),
    np.float64(-8.652937874413363e-06),
    np.float64(0.0),
    np.float64(-2.6839030779506957e-06),
])

RS_CHEB = [RS_C0, RS_C1, RS_C2, RS_C3, RS_C4]

RS_CHEB_PACKED = np.zeros((5, 23))
for _k, _c in enumerate(RS_CHEB):
    RS_CHEB_PACKED[_k, :len(_c)] = _c

package fx;

class LargeClass {
    int step01(int a) {
        int b = a + 1;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step02(int a) {
        int b = a + 2;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step03(int a) {
        int b = a + 3;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step04(int a) {
        int b = a + 4;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step05(int a) {
        int b = a + 5;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step06(int a) {
        int b = a + 6;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step07(int a) {
        int b = a + 7;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step08(int a) {
        int b = a + 8;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step09(int a) {
        int b = a + 9;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step10(int a) {
        int b = a + 10;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step11(int a) {
        int b = a + 11;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step12(int a) {
        int b = a + 12;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step13(int a) {
        int b = a + 13;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step14(int a) {
        int b = a + 14;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step15(int a) {
        int b = a + 15;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step16(int a) {
        int b = a + 16;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step17(int a) {
        int b = a + 17;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step18(int a) {
        int b = a + 18;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step19(int a) {
        int b = a + 19;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step20(int a) {
        int b = a + 20;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step21(int a) {
        int b = a + 21;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step22(int a) {
        int b = a + 22;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step23(int a) {
        int b = a + 23;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step24(int a) {
        int b = a + 24;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step25(int a) {
        int b = a + 25;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step26(int a) {
        int b = a + 26;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step27(int a) {
        int b = a + 27;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step28(int a) {
        int b = a + 28;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step29(int a) {
        int b = a + 29;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step30(int a) {
        int b = a + 30;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step31(int a) {
        int b = a + 31;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step32(int a) {
        int b = a + 32;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step33(int a) {
        int b = a + 33;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step34(int a) {
        int b = a + 34;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step35(int a) {
        int b = a + 35;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step36(int a) {
        int b = a + 36;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step37(int a) {
        int b = a + 37;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step38(int a) {
        int b = a + 38;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step39(int a) {
        int b = a + 39;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step40(int a) {
        int b = a + 40;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step41(int a) {
        int b = a + 41;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step42(int a) {
        int b = a + 42;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step43(int a) {
        int b = a + 43;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step44(int a) {
        int b = a + 44;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step45(int a) {
        int b = a + 45;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step46(int a) {
        int b = a + 46;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step47(int a) {
        int b = a + 47;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step48(int a) {
        int b = a + 48;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step49(int a) {
        int b = a + 49;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step50(int a) {
        int b = a + 50;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step51(int a) {
        int b = a + 51;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step52(int a) {
        int b = a + 52;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step53(int a) {
        int b = a + 53;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step54(int a) {
        int b = a + 54;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step55(int a) {
        int b = a + 55;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step56(int a) {
        int b = a + 56;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step57(int a) {
        int b = a + 57;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step58(int a) {
        int b = a + 58;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step59(int a) {
        int b = a + 59;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step60(int a) {
        int b = a + 60;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step61(int a) {
        int b = a + 61;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step62(int a) {
        int b = a + 62;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }

    int step63(int a) {
        int b = a + 63;
        int c = b * 2;
        int d = c - 3;
        int e = d / 4;
        int f = e % 5;
        return f + b;
    }
}

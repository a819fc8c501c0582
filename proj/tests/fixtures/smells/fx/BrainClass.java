package fx;

class BrainClass {
    private int north;
    private int south;
    private int east;

    int analyze(int p, int q) {
        int total = 0;
        int count = 0;
        int limit = p + q;
        int spare = p - q;
        int carry = 0;
        for (int i = 0; i < p; i++) {
            if (i % 2 == 0) {
                while (count < limit) {
                    if (count > q) {
                        if (total > 100) {
                            total = 0;
                            carry++;
                        }
                        total += count;
                    }
                    count++;
                }
            }
            if (i > spare) total--;
            if (i == q) total++;
            if (total < 0) total = 0;
            if (carry > 3) carry = 0;
        }
        if (p > 0 && q > 0) total++;
        if (p < 0 || q < 0) total--;
        total = total * 3 + 1;
        total = total * 3 + 2;
        total = total * 3 + 3;
        total = total * 3 + 4;
        total = total * 3 + 5;
        total = total * 3 + 6;
        total = total * 3 + 7;
        total = total * 3 + 8;
        total = total * 3 + 9;
        total = total * 3 + 10;
        total = total * 3 + 11;
        total = total * 3 + 12;
        total = total * 3 + 13;
        total = total * 3 + 14;
        total = total * 3 + 15;
        total = total * 3 + 16;
        total = total * 3 + 17;
        total = total * 3 + 18;
        total = total * 3 + 19;
        total = total * 3 + 20;
        total = total * 3 + 21;
        total = total * 3 + 22;
        total = total * 3 + 23;
        total = total * 3 + 24;
        total = total * 3 + 25;
        total = total * 3 + 26;
        total = total * 3 + 27;
        total = total * 3 + 28;
        total = total * 3 + 29;
        total = total * 3 + 30;
        total = total * 3 + 31;
        total = total * 3 + 32;
        total = total * 3 + 33;
        total = total * 3 + 34;
        total = total * 3 + 35;
        total = total * 3 + 36;
        total = total * 3 + 37;
        total = total * 3 + 38;
        total = total * 3 + 39;
        total = total * 3 + 40;
        return total + carry;
    }

    int walkNorth(int k) {
        int r = north;
        if (k > 0) r++;
        if (k > 1) r++;
        if (k > 2) r++;
        if (k > 3) r++;
        if (k > 4) r++;
        if (k > 5) r++;
        if (k > 6) r++;
        if (k > 7) r++;
        return r;
    }

    int walkSouth(int k) {
        int r = south;
        if (k > 0) r++;
        if (k > 1) r++;
        if (k > 2) r++;
        if (k > 3) r++;
        if (k > 4) r++;
        if (k > 5) r++;
        if (k > 6) r++;
        if (k > 7) r++;
        return r;
    }

    int walkEast(int k) {
        int r = east;
        if (k > 0) r++;
        if (k > 1) r++;
        if (k > 2) r++;
        if (k > 3) r++;
        if (k > 4) r++;
        if (k > 5) r++;
        if (k > 6) r++;
        if (k > 7) r++;
        return r;
    }

    int plain(int k) {
        int r = 0;
        if (k > 0) r++;
        if (k > 1) r++;
        if (k > 2) r++;
        if (k > 3) r++;
        if (k > 4) r++;
        if (k > 5) r++;
        if (k > 6) r++;
        if (k > 7) r++;
        return r;
    }

}

package aurora.audio;

public class CallMixer {

    public int mix(int[] levels) {
        int acc = 0;
        for (int level : levels) {
            if (level > 90) {
                acc += clamp(level);
            } else if (level > 0) {
                acc += level;
            } else {
                acc -= 1;
            }
        }
        return acc;
    }

    private int clamp(int level) {
        return Math.min(level, 100);
    }
}

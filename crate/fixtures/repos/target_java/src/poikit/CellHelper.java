package poikit;

public class CellHelper {
    private int count;
    private String label;

    public int collectCount() {
        // running total of collected cells
        count += 1;
        return count;
    }

    public void reset() {
        count = 0;
    }

    public String formatLabel(String prefix) {
        return prefix + ":" + label;
    }
}

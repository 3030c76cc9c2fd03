// storage helper for segment records
class SegmentCache4
{
    @Capacity(limit=32, grow=2)
    private int slotSize = 8;

    private long cursorMask = -1;

    public int packSlot( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + slotSize;
    }

    public long flushCursor( boolean dense, int count )
    {
        long mask = cursorMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 3;
    }

    public int scanAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -2;
        }
        return total;
    }

    public int relay( Visitor sink, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        sink.visit( picked, rounds );
        refresh( sink, true );
        this.slotSize = picked;
        return this.slotSize;
    }

    public void refresh( Visitor sink, boolean dense )
    {
        int mark = dense ? this.slotSize : -1;
        sink.visit( mark, 0 );
        sink.accept( false );
    }

    @Source(kind="segment", retries=3)
    public String describe( String title, double ratio )
    {
        double scaled = (double) slotSize * ratio;
        long wide = (long) scaled;
        return title + "#" + wide.toString();
    }
}
